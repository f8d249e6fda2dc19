#pragma once

#include <string>
#include <vector>

#include "latbench/controllers/config.hpp"

namespace latbench::controllers {

/// How the single published preview value maps onto (d_p0, t_p).
enum class PreviewReading { kPreviewTime, kMinimumDistance };
inline constexpr PreviewReading kPublishedPreviewReading = PreviewReading::kMinimumDistance;

PreviewConfig preview_from_published(double value, PreviewReading reading = kPublishedPreviewReading);

/// All fifteen setups with an explicit preview reading.
std::vector<ControllerConfig> published_setups(PreviewReading reading);

/// The fifteen published setups, three per family, labelled "<FAMILY>-<n>".
const std::vector<ControllerConfig>& published_setups();

/// Setup n (1..3) of a family; throws ArgumentError otherwise.
const ControllerConfig& published_setup(Family family, int index);
const ControllerConfig& published_setup(const std::string& label);

/// Labels whose published values are uncertain, with a short reason.
struct SetupNote {
  std::string label;
  std::string note;
};
const std::vector<SetupNote>& published_setup_notes();

}  // namespace latbench::controllers
