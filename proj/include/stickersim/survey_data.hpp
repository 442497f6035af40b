#pragma once

#include <array>
#include <string>
#include <vector>

#include "stickersim/album.hpp"

namespace stickersim {

// Bundled observed data used by the analysis examples and tests.

// Ten surveyed displays of the Amici series (animal-sticker album,
// B = 576): serial tag plus the recorded sticker inventory. Every display is
// internally duplicate-free; a few inventories have fewer than 300 entries.
const std::vector<Display>& amici_survey_displays();

// Same data rendered as a displays.csv document.
std::string amici_survey_csv();

// Duplicate counts observed in three bought WM-series displays
// (500 cards each, B = 640).
inline constexpr std::array<int, 3> wm_observed_display_duplicates{73, 98, 111};

}  // namespace stickersim
