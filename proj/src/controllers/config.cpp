#include "latbench/controllers/config.hpp"

#include <cmath>
#include <fstream>

#include "latbench/error.hpp"

namespace latbench::controllers {
namespace {

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError(field, what);
}

void nonnegative(double v, const std::string& field) {
  require(std::isfinite(v) && v >= 0.0, field, "must be finite and >= 0");
}

void positive(double v, const std::string& field) {
  require(std::isfinite(v) && v > 0.0, field, "must be finite and > 0");
}

double number(const nlohmann::json& obj, const std::string& key, const std::string& prefix) {
  const std::string field = prefix + key;
  require(obj.contains(key), field, "missing");
  require(obj.at(key).is_number(), field, "must be a number");
  return obj.at(key).get<double>();
}

double number_or(const nlohmann::json& obj, const std::string& key, const std::string& prefix, double fallback) {
  return obj.contains(key) ? number(obj, key, prefix) : fallback;
}

void reject_unknown(const nlohmann::json& obj, const std::vector<std::string>& known, const std::string& prefix) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const auto& k : known) ok = ok || item.key() == k;
    require(ok, prefix + item.key(), "unknown field");
  }
}

int integer(const nlohmann::json& obj, const std::string& key, const std::string& prefix) {
  const double v = number(obj, key, prefix);
  require(v == std::floor(v), prefix + key, "must be an integer");
  return static_cast<int>(v);
}

}  // namespace

Family ControllerConfig::family() const { return static_cast<Family>(params.index()); }

void ControllerConfig::validate() const {
  nonnegative(preview.d_p0, "preview.d_p0");
  nonnegative(preview.t_p, "preview.t_p");
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LqrParams>) {
          nonnegative(p.q1, "params.q1");
          nonnegative(p.q2, "params.q2");
          nonnegative(p.q3, "params.q3");
          nonnegative(p.q4, "params.q4");
          positive(p.N_LQR, "params.N_LQR");
        } else if constexpr (std::is_same_v<T, MfcParams>) {
          nonnegative(p.K_p, "params.K_p");
          nonnegative(p.K_d, "params.K_d");
          positive(p.alpha, "params.alpha");
          positive(p.C, "params.C");
        } else if constexpr (std::is_same_v<T, SamfcParams>) {
          nonnegative(p.K_p, "params.K_p");
          nonnegative(p.K_d, "params.K_d");
          positive(p.alpha_0, "params.alpha_0");
          nonnegative(p.v_x0, "params.v_x0");
          nonnegative(p.K_alpha, "params.K_alpha");
          positive(p.C, "params.C");
        } else if constexpr (std::is_same_v<T, PidParams>) {
          nonnegative(p.K_p, "params.K_p");
          nonnegative(p.K_i, "params.K_i");
          nonnegative(p.K_d, "params.K_d");
          positive(p.N_PID, "params.N_PID");
        } else {
          require(p.h_p >= 1, "params.h_p", "must be >= 1");
          require(p.h_c >= 1, "params.h_c", "must be >= 1");
          require(p.h_c <= p.h_p, "params.h_c", "must not exceed h_p");
          nonnegative(p.w_udot, "params.w_udot");
        }
      },
      params);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kLqr: return "LQR";
    case Family::kMfc: return "MFC";
    case Family::kSamfc: return "SAMFC";
    case Family::kPid: return "PID";
    case Family::kNlmpc: return "NLMPC";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw ConfigError("type", "unknown controller type '" + name + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = {Family::kLqr, Family::kMfc, Family::kSamfc, Family::kPid,
                                               Family::kNlmpc};
  return families;
}

nlohmann::json to_json(const ControllerConfig& c) {
  nlohmann::json params = std::visit(
      [](const auto& p) -> nlohmann::json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LqrParams>) {
          return {{"q1", p.q1}, {"q2", p.q2}, {"q3", p.q3}, {"q4", p.q4}, {"N_LQR", p.N_LQR}};
        } else if constexpr (std::is_same_v<T, MfcParams>) {
          return {{"K_p", p.K_p}, {"K_d", p.K_d}, {"alpha", p.alpha}, {"C", p.C}};
        } else if constexpr (std::is_same_v<T, SamfcParams>) {
          return {{"K_p", p.K_p},   {"K_d", p.K_d},         {"alpha_0", p.alpha_0},
                  {"v_x0", p.v_x0}, {"K_alpha", p.K_alpha}, {"C", p.C}};
        } else if constexpr (std::is_same_v<T, PidParams>) {
          return {{"K_p", p.K_p}, {"K_i", p.K_i}, {"K_d", p.K_d}, {"N_PID", p.N_PID}};
        } else {
          return {{"h_p", p.h_p}, {"h_c", p.h_c}, {"w_udot", p.w_udot}};
        }
      },
      c.params);
  nlohmann::json doc = {{"type", family_name(c.family())},
                        {"params", params},
                        {"preview", {{"d_p0", c.preview.d_p0}, {"t_p", c.preview.t_p}}}};
  if (!c.label.empty()) doc["label"] = c.label;
  return doc;
}

ControllerConfig controller_from_json(const nlohmann::json& doc) {
  require(doc.is_object(), "<root>", "controller config must be a JSON object");
  reject_unknown(doc, {"type", "params", "preview", "label"}, "");
  require(doc.contains("type"), "type", "missing");
  require(doc.at("type").is_string(), "type", "must be a string");
  require(doc.contains("params"), "params", "missing");
  require(doc.at("params").is_object(), "params", "must be an object");
  require(doc.contains("preview"), "preview", "missing");
  require(doc.at("preview").is_object(), "preview", "must be an object");

  ControllerConfig c;
  const Family family = parse_family(doc.at("type").get<std::string>());
  const auto& p = doc.at("params");
  const std::string pp = "params.";
  switch (family) {
    case Family::kLqr:
      reject_unknown(p, {"q1", "q2", "q3", "q4", "N_LQR"}, pp);
      c.params = LqrParams{number(p, "q1", pp), number(p, "q2", pp), number(p, "q3", pp), number(p, "q4", pp),
                           number(p, "N_LQR", pp)};
      break;
    case Family::kMfc:
      reject_unknown(p, {"K_p", "K_d", "alpha", "C"}, pp);
      c.params = MfcParams{number(p, "K_p", pp), number(p, "K_d", pp), number(p, "alpha", pp),
                           number_or(p, "C", pp, 1.5)};
      break;
    case Family::kSamfc:
      reject_unknown(p, {"K_p", "K_d", "alpha_0", "v_x0", "K_alpha", "C"}, pp);
      c.params = SamfcParams{number(p, "K_p", pp),  number(p, "K_d", pp),     number(p, "alpha_0", pp),
                             number(p, "v_x0", pp), number(p, "K_alpha", pp), number_or(p, "C", pp, 1.5)};
      break;
    case Family::kPid:
      reject_unknown(p, {"K_p", "K_i", "K_d", "N_PID"}, pp);
      c.params = PidParams{number(p, "K_p", pp), number(p, "K_i", pp), number(p, "K_d", pp), number(p, "N_PID", pp)};
      break;
    case Family::kNlmpc:
      reject_unknown(p, {"h_p", "h_c", "w_udot"}, pp);
      c.params = NlmpcParams{integer(p, "h_p", pp), integer(p, "h_c", pp), number(p, "w_udot", pp)};
      break;
  }
  const auto& pv = doc.at("preview");
  reject_unknown(pv, {"d_p0", "t_p"}, "preview.");
  c.preview.d_p0 = number(pv, "d_p0", "preview.");
  c.preview.t_p = number(pv, "t_p", "preview.");
  if (doc.contains("label")) {
    require(doc.at("label").is_string(), "label", "must be a string");
    c.label = doc.at("label").get<std::string>();
  }
  c.validate();
  return c;
}

ControllerConfig load_controller_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open controller config");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path, e.what());
  }
  return controller_from_json(doc);
}

const std::vector<std::string>& parameter_names(Family family) {
  static const std::vector<std::string> lqr = {"q1", "q2", "q3", "q4", "N_LQR", "d_p0", "t_p"};
  static const std::vector<std::string> mfc = {"K_p", "K_d", "alpha", "d_p0", "t_p"};
  static const std::vector<std::string> samfc = {"K_p", "K_d", "alpha_0", "v_x0", "K_alpha", "d_p0", "t_p"};
  static const std::vector<std::string> pid = {"K_p", "K_i", "K_d", "N_PID", "d_p0", "t_p"};
  static const std::vector<std::string> nlmpc = {"h_p", "h_c", "w_udot", "d_p0", "t_p"};
  switch (family) {
    case Family::kLqr: return lqr;
    case Family::kMfc: return mfc;
    case Family::kSamfc: return samfc;
    case Family::kPid: return pid;
    case Family::kNlmpc: return nlmpc;
  }
  return lqr;
}

std::vector<double> parameter_vector(const ControllerConfig& c) {
  std::vector<double> v = std::visit(
      [](const auto& p) -> std::vector<double> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LqrParams>) {
          return {p.q1, p.q2, p.q3, p.q4, p.N_LQR};
        } else if constexpr (std::is_same_v<T, MfcParams>) {
          return {p.K_p, p.K_d, p.alpha};
        } else if constexpr (std::is_same_v<T, SamfcParams>) {
          return {p.K_p, p.K_d, p.alpha_0, p.v_x0, p.K_alpha};
        } else if constexpr (std::is_same_v<T, PidParams>) {
          return {p.K_p, p.K_i, p.K_d, p.N_PID};
        } else {
          return {double(p.h_p), double(p.h_c), p.w_udot};
        }
      },
      c.params);
  v.push_back(c.preview.d_p0);
  v.push_back(c.preview.t_p);
  return v;
}

ControllerConfig config_from_vector(Family family, const std::vector<double>& v) {
  if (v.size() != parameter_names(family).size()) throw ArgumentError("parameter vector has the wrong length");
  ControllerConfig c;
  switch (family) {
    case Family::kLqr: c.params = LqrParams{v[0], v[1], v[2], v[3], v[4]}; break;
    case Family::kMfc: c.params = MfcParams{v[0], v[1], v[2], 1.5}; break;
    case Family::kSamfc: c.params = SamfcParams{v[0], v[1], v[2], v[3], v[4], 1.5}; break;
    case Family::kPid: c.params = PidParams{v[0], v[1], v[2], v[3]}; break;
    case Family::kNlmpc: {
      const int hp = std::max(1, static_cast<int>(std::lround(v[0])));
      const int hc = std::clamp(static_cast<int>(std::lround(v[1])), 1, hp);
      c.params = NlmpcParams{hp, hc, v[2]};
      break;
    }
  }
  c.preview = {v[v.size() - 2], v.back()};
  c.validate();
  return c;
}

}  // namespace latbench::controllers
