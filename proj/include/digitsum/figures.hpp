#pragma once

#include <ostream>
#include <string>

#include "digitsum/numeric.hpp"

namespace digitsum {

// Parameters for the figure-data emitters.  max_lambda controls sweeps over
// n (the sweep covers n up to 2^max_lambda, or the dyadic block starting at
// 2^max_lambda for the fractional-part figures); resolution controls x-grid
// figures; jobs > 1 parallelizes the per-n work with results merged in
// deterministic n-order.
struct FigureOptions {
    long max_lambda = 0;  // 0: use the figure's default
    long resolution = 0;  // 0: use the figure's default
    int jobs = 1;
};

// Emits the CSV for the named figure (2, 4, 5, 8, 10, 11, 13, 14, 15).
// First line is a header naming the figure and the column semantics;
// rationals are printed as "p/q", reals with 12 significant digits.
// Throws std::invalid_argument for an unknown figure number.
void write_figure_csv(int figure, std::ostream& os,
                      const FigureOptions& opt = {});

// True if the figure number is one of the supported ones.
bool figure_supported(int figure);

}  // namespace digitsum
