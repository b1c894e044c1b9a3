#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "algpencil/bialg.hpp"
#include "algpencil/classify.hpp"
#include "algpencil/io.hpp"
#include "algpencil/jordan.hpp"

namespace algpencil {

// Machine report plus its human rendering; shared by the CLI and the
// python bindings so identical inputs give byte-identical machine output.
struct Report {
    Json machine;
    std::string human;
};

Report check_report(const Algebra& a);

// "degenerate": true in the machine report when chi vanishes at f.
Report analyze_report(const Algebra& a, const Functional& f, std::uint64_t seed,
                      std::optional<Rational> mu);

Report canon_report(const Algebra& a, std::uint64_t seed);

Report split_report(const Algebra& a, const Functional& f);

// machine part is the assembled algebra document itself
Report build_report(const Algebra& h_algebra, const Algebra& hprime_algebra,
                    const Matrix& pairing);

Functional choose_functional(const Algebra& a, const std::string& functional_arg,
                             std::uint64_t seed);

}  // namespace algpencil
