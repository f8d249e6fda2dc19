#include "latbench/controllers/setups.hpp"

#include "latbench/error.hpp"

namespace latbench::controllers {
namespace {

struct Row {
  const char* label;
  ControllerParams params;
  double preview;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {"LQR-1", LqrParams{0.002, 0.0002, 0.001, 0.0002, 6.158}, 0.0},
      {"LQR-2", LqrParams{0.002, 0.0002, 0.001, 0.0002, 9.543}, 0.0},
      {"LQR-3", LqrParams{0.001, 0.0002, 0.001, 0.0001, 7.911}, 0.0},
      {"MFC-1", MfcParams{0.0, 3.337, 373.2, 1.5}, 1.516},
      {"MFC-2", MfcParams{0.0, 3.603, 502.4, 1.5}, 1.149},
      {"MFC-3", MfcParams{0.0, 1.810, 373.8, 1.5}, 0.516},
      {"SAMFC-1", SamfcParams{0.0, 4.266, 94.4, 2.68, 10.0, 1.5}, 1.0},
      {"SAMFC-2", SamfcParams{0.75, 2.766, 93.6, 12.78, 10.0, 1.5}, 0.625},
      {"SAMFC-3", SamfcParams{0.125, 2.141, 93.0, 10.66, 10.0, 1.5}, 0.0},
      {"PID-1", PidParams{0.160, 0.0, 0.030, 8.0}, 1.763},
      {"PID-2", PidParams{0.153, 0.0, 0.065, 20.0}, 0.059},
      {"PID-3", PidParams{0.071, 0.0, 0.027, 3.0}, 2.346},
      {"NLMPC-1", NlmpcParams{11, 3, 15.00}, 0.0},
      {"NLMPC-2", NlmpcParams{13, 4, 26.08}, 0.234},
      {"NLMPC-3", NlmpcParams{21, 3, 43.11}, 0.078},
  };
  return table;
}

}  // namespace

PreviewConfig preview_from_published(double value, PreviewReading reading) {
  if (reading == PreviewReading::kPreviewTime) return {0.0, value};
  return {value, 0.0};
}

std::vector<ControllerConfig> published_setups(PreviewReading reading) {
  std::vector<ControllerConfig> out;
  for (const auto& r : rows()) {
    ControllerConfig c;
    c.label = r.label;
    c.params = r.params;
    c.preview = preview_from_published(r.preview, reading);
    c.validate();
    out.push_back(c);
  }
  return out;
}

const std::vector<ControllerConfig>& published_setups() {
  static const std::vector<ControllerConfig> setups = published_setups(kPublishedPreviewReading);
  return setups;
}

const ControllerConfig& published_setup(Family family, int index) {
  if (index < 1 || index > 3) throw ArgumentError("setup index must be 1, 2 or 3");
  return published_setup(family_name(family) + "-" + std::to_string(index));
}

const ControllerConfig& published_setup(const std::string& label) {
  for (const auto& c : published_setups()) {
    if (c.label == label) return c;
  }
  throw ArgumentError("unknown setup '" + label + "'");
}

const std::vector<SetupNote>& published_setup_notes() {
  static const std::vector<SetupNote> notes = {
      {"MFC-3", "K_p missing from the published table (two values for three setups); 0 assumed"},
  };
  return notes;
}

}  // namespace latbench::controllers
