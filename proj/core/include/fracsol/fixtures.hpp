#ifndef FRACSOL_FIXTURES_HPP
#define FRACSOL_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

namespace fracsol {

/// One entry of the transcribed reference tables. Values are kept verbatim
/// as fixtures; they are reported with discrepancy columns, never asserted
/// as ground truth.
struct PaperFixture {
    int table_id;        // table number by order of appearance (2..9)
    std::string label;   // caption key, e.g. "porous_compare"
    std::string problem; // example1 / example2 / example3
    double alpha;
    std::string method;  // HPSTM, ADM, Meshless, VIM, FDM, Spectral, AbsError
    double value;
};

/// Full transcription of the reference tables.
const std::vector<PaperFixture>& paper_fixtures();

std::optional<double> fixture_value(const std::string& label, double alpha,
                                    const std::string& method);

} // namespace fracsol

#endif
