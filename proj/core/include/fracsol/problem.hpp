#ifndef FRACSOL_PROBLEM_HPP
#define FRACSOL_PROBLEM_HPP

#include <string>
#include <vector>

#include "fracsol/expr.hpp"
#include "fracsol/series.hpp"

namespace fracsol {

/// coeff(x) * d^order u / dx^order, order in {0, 1, 2}
struct LinearTerm {
    int order = 0;
    Expr coeff;
};

/// coeff(x) * u^u_pow * ux^ux_pow * uxx^uxx_pow
struct NonlinearMonomial {
    int u_pow = 0;
    int ux_pow = 0;
    int uxx_pow = 0;
    Expr coeff;
};

/// coeff(x) * t^t_power, t_power a nonnegative integer
struct SourceTerm {
    int t_power = 0;
    Expr coeff;
};

/// Which side of the equation the spatial terms live on.
///   Rhs:  D^alpha u = R u + N u + f
///   Lhs:  D^alpha u + R u + N u = f
enum class EquationForm { Rhs, Lhs };

struct FPDEProblem {
    std::string name;
    double alpha = 1.0;
    Expr ic;
    std::vector<LinearTerm> linear_op;
    std::vector<NonlinearMonomial> nonlinear_op;
    std::vector<SourceTerm> source;
    SpatialDomain domain;
    EquationForm form = EquationForm::Rhs;

    FPDEProblem with_alpha(double a) const {
        FPDEProblem p = *this;
        p.alpha = a;
        return p;
    }

    /// Throws ValidationError naming the violated field constraint.
    void validate() const;
};

/// A problem file: the base problem plus the alpha grid and default term
/// count it declares.
struct LoadedProblem {
    FPDEProblem problem; // alpha set to alphas.front()
    std::vector<double> alphas;
    int default_terms = 5;
};

/// Read and validate a problem definition file (JSON, schema in the README).
LoadedProblem load_problem(const std::string& path);

/// Same, from in-memory text; `origin` names the source in error messages.
LoadedProblem parse_problem_text(const std::string& text, const std::string& origin);

} // namespace fracsol

#endif
