#ifndef FRACSOL_SERIES_IO_HPP
#define FRACSOL_SERIES_IO_HPP

#include <string>

#include "fracsol/series.hpp"
#include "fracsol/solvers.hpp"

namespace fracsol {

/// Structured text document for a series: alpha, domain, and the ordered
/// term list {const_part, alpha_mult, coefficient-expression string}.
std::string series_to_text(const TimePowerSeries& s);
TimePowerSeries series_from_text(const std::string& text);

/// Whole-solution document: problem name, alpha, n, u_0..u_n and partial sum.
std::string solution_to_text(const SeriesSolution& sol);
SeriesSolution solution_from_text(const std::string& text);

} // namespace fracsol

#endif
