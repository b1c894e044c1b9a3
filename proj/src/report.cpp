#include "algpencil/report.hpp"

#include <sstream>

#include "algpencil/errors.hpp"

namespace algpencil {

namespace {

Json factored_to_json(const FactoredForm& ff) {
    Json j;
    j["constant"] = rational_to_json(ff.constant);
    j["mult_lambda"] = ff.mult_lambda;
    j["mult_mu"] = ff.mult_mu;
    Json factors = Json::array();
    for (const auto& [p, m] : ff.factors) {
        Json f;
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
        f["alpha_minpoly"] = std::move(coeffs);
        f["multiplicity"] = m;
        if (p.degree() == 1) {
            f["alpha"] = rational_str(-p.coeff(0) / p.coeff(1));
        } else {
            Json roots = Json::array();
            for (const auto& r : numeric_roots(p)) {
                std::ostringstream os;
                os.precision(15);
                os << r.real();
                if (r.imag() != 0) os << (r.imag() > 0 ? "+" : "") << r.imag() << "i";
                roots.push_back(os.str());
            }
            f["alpha_approx_display_only"] = std::move(roots);
        }
        factors.push_back(std::move(f));
    }
    j["alpha_factors"] = std::move(factors);
    return j;
}

Json element_json(const Element& e) {
    Json out = Json::array();
    for (const auto& c : e.coords) out.push_back(rational_to_json(c));
    return out;
}

}  // namespace

Functional choose_functional(const Algebra& a, const std::string& functional_arg,
                             std::uint64_t seed) {
    if (!functional_arg.empty()) {
        std::vector<Rational> vals = parse_rational_list(functional_arg);
        if (vals.size() != a.dim())
            throw Error(ErrorCode::ParseError,
                        "functional needs " + std::to_string(a.dim()) + " entries");
        return Functional{vals};
    }
    return sample_generic(a, seed).f;
}

Report check_report(const Algebra& a) {
    auto violation = check_associativity(a);
    auto unity = find_unity(a);

    Json machine;
    machine["command"] = "check";
    machine["dim"] = a.dim();
    machine["associative"] = !violation.has_value();
    std::ostringstream human;
    human << "dim " << a.dim() << " algebra; basis";
    for (const auto& n : a.basis_names()) human << " " << n;
    human << "\n";
    if (violation) {
        Json w;
        w["i"] = a.basis_names()[violation->i];
        w["j"] = a.basis_names()[violation->j];
        w["k"] = a.basis_names()[violation->k];
        w["difference"] = element_json(violation->difference);
        machine["violation"] = std::move(w);
        human << "NOT associative: first violation at (" << a.basis_names()[violation->i]
              << "," << a.basis_names()[violation->j] << "," << a.basis_names()[violation->k]
              << "), a(bc) - (ab)c = " << a.element_str(violation->difference) << "\n";
    } else {
        human << "associative: yes\n";
    }
    if (unity) {
        machine["unity"] = element_json(*unity);
        human << "unity: " << a.element_str(*unity) << "\n";
    } else {
        human << "unity: none\n";
    }
    return {std::move(machine), human.str()};
}

Report analyze_report(const Algebra& a, const Functional& f, std::uint64_t seed,
                      std::optional<Rational> mu) {
    Json machine;
    machine["command"] = "analyze";
    machine["dim"] = a.dim();
    std::ostringstream human;

    Json vals = Json::array();
    for (const auto& v : f.values) vals.push_back(rational_to_json(v));
    machine["functional"] = std::move(vals);
    human << "F = " << f.str() << "\n";

    CharPencil cp = charpoly(a, f);
    machine["chi"] = cp.chi.str();
    human << "chi(lambda,mu,F) = " << cp.chi.str() << "\n";
    if (!cp.factored) {
        machine["degenerate"] = true;
        human << "the characteristic polynomial vanishes identically at F;\n"
              << "try another functional (--functional or --seed); if every functional\n"
              << "degenerates the pencil carries no spectral information (Nil is nonzero "
                 "everywhere)\n";
        return {std::move(machine), human.str()};
    }
    machine["chi_factored"] = factored_to_json(*cp.factored);
    human << "  factored: " << cp.factored->str() << "\n";

    EvaluatedPencil p = evaluate(a, f);
    Json stab;
    stab["dim_stab_0"] = stabilizer(p, SpectralValue::finite(0)).dim();
    stab["dim_stab_1"] = stabilizer(p, SpectralValue::finite(1)).dim();
    stab["dim_stab_inf"] = stabilizer(p, SpectralValue::infinity()).dim();
    machine["stabilizers"] = stab;
    machine["dim_nil"] = nil(a, f).dim();
    human << "dim Stab(0) = " << stab["dim_stab_0"].get<std::size_t>()
          << ", dim Stab(1) = " << stab["dim_stab_1"].get<std::size_t>()
          << ", dim Stab(inf) = " << stab["dim_stab_inf"].get<std::size_t>()
          << ", dim Nil = " << machine["dim_nil"].get<std::size_t>() << "\n";

    QForm q = q_form(a, f);
    Json qj;
    qj["gram"] = matrix_to_json(q.gram);
    qj["nondegenerate"] = q.nondegenerate;
    if (q.lambda_plus_mu_multiplicity)
        qj["lambda_plus_mu_multiplicity"] = *q.lambda_plus_mu_multiplicity;
    machine["q_form"] = std::move(qj);
    human << "Q_F on Stab(1): " << (q.nondegenerate ? "nondegenerate" : "degenerate");
    if (q.lambda_plus_mu_multiplicity)
        human << ", (lambda+mu)-multiplicity " << *q.lambda_plus_mu_multiplicity;
    human << "\n";

    int index = lie_index(a, seed);
    machine["lie_index"] = index;
    human << "lie index (seeded, 8 trials): " << index << "\n";

    Decomposition dec = decompose(a, f, mu);
    machine["mu_used"] = rational_to_json(dec.mu_used);
    Json blocks = Json::array();
    human << "decomposition (mu = " << rational_str(dec.mu_used) << "):\n";
    for (const auto& b : dec.blocks) {
        Json bj;
        bj["alpha"] = b.alpha.str();
        bj["chain_dims"] = b.chain_dims;
        bj["dim"] = b.space.dim();
        bj["basis"] = matrix_to_json(b.space.basis());
        blocks.push_back(std::move(bj));
        human << "  V(" << b.alpha.str() << "): dim " << b.space.dim() << ", chain [";
        for (std::size_t i = 0; i < b.chain_dims.size(); ++i)
            human << (i ? " " : "") << b.chain_dims[i];
        human << "]\n";
    }
    machine["blocks"] = std::move(blocks);

    VnReport report = verify_vn(a, f);
    Json checks = Json::array();
    human << "spectral decomposition checks:\n";
    for (const auto& c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["applicable"] = c.applicable;
        cj["required"] = c.required;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
        human << "  " << c.name << ": "
              << (!c.applicable ? "n/a" : (c.pass ? "PASS" : (c.required ? "FAIL" : "noted")))
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
    machine["vn_checks"] = std::move(checks);
    machine["vn_all_pass"] = report.all_pass();

    BlockCharpolyResult bc = block_charpoly_check(a, f);
    Json bj;
    bj["pass"] = bc.pass;
    bj["assembled"] = bc.assembled.str();
    if (bc.pass) bj["constant"] = rational_to_json(bc.constant);
    if (!bc.pairing_failures.empty()) bj["pairing_failures"] = bc.pairing_failures;
    machine["block_charpoly"] = std::move(bj);
    human << "block charpoly product: " << (bc.pass ? "PASS" : "FAIL") << "\n";

    return {std::move(machine), human.str()};
}

Report canon_report(const Algebra& a, std::uint64_t seed) {
    CanonicalForm c = [&] {
        if (a.dim() == 2) return canon_dim2(a, seed);
        if (a.dim() == 3) return canon_dim3_unital(a, seed);
        throw Error(ErrorCode::Unsupported, "canonical forms exist for dimensions 2 and 3 only");
    }();
    Json machine;
    machine["command"] = "canon";
    machine["label"] = label_name(c.label);
    machine["transform"] = matrix_to_json(c.transform);
    std::ostringstream human;
    human << "canonical label: " << label_name(c.label) << "\n";
    if (c.label != CanonicalLabel::COMM) {
        human << "transform rows (canonical basis in input coordinates):\n";
        for (std::size_t i = 0; i < c.transform.rows(); ++i) {
            human << "  ";
            for (std::size_t j = 0; j < c.transform.cols(); ++j)
                human << (j ? " " : "") << rational_str(c.transform.at(i, j));
            human << "\n";
        }
    }
    return {std::move(machine), human.str()};
}

Report split_report(const Algebra& a, const Functional& f) {
    SplitData s = split(a, f);
    IdentityReport report = check_identities(s);

    Json machine;
    machine["command"] = "split";
    machine["h"] = s.h;
    machine["h_table"] = algebra_to_json(s.h_algebra);
    machine["hprime_table"] = algebra_to_json(s.hprime_algebra);
    machine["pairing"] = matrix_to_json(s.pairing);
    machine["adapted_basis"] = matrix_to_json(s.adapted_basis);
    Json identities = Json::array();
    for (const auto& e : report.entries) {
        Json ej;
        ej["name"] = e.name;
        ej["pass"] = e.pass;
        if (!e.witness.empty()) ej["witness"] = e.witness;
        identities.push_back(std::move(ej));
    }
    machine["identities"] = std::move(identities);
    machine["identities_all_pass"] = report.all_pass();
    Json deltas = Json::array();
    for (std::size_t i = 0; i < s.h; ++i) {
        Element x{std::vector<Rational>(s.h)};
        x.coords[i] = 1;
        deltas.push_back(matrix_to_json(delta(s, x)));
    }
    machine["delta"] = std::move(deltas);

    std::ostringstream human;
    human << "split: dim H = " << s.h << " (algebra dim " << 2 * s.h + 1 << ")\n";
    human << "identity checks:\n";
    for (const auto& e : report.entries)
        human << "  " << e.name << ": " << (e.pass ? "PASS" : "FAIL")
              << (e.witness.empty() ? "" : " at " + e.witness) << "\n";
    return {std::move(machine), human.str()};
}

Report build_report(const Algebra& h_algebra, const Algebra& hprime_algebra,
                    const Matrix& pairing) {
    Algebra built = build_index1(h_algebra, hprime_algebra, pairing);
    Json machine = algebra_to_json(built);
    std::ostringstream human;
    human << "assembled dim " << built.dim() << " algebra with unity \""
          << built.basis_names()[*built.unity_index()] << "\"\n";
    for (std::size_t i = 0; i < built.dim(); ++i)
        for (std::size_t j = 0; j < built.dim(); ++j)
            human << "  " << built.basis_names()[i] << " * " << built.basis_names()[j] << " = "
                  << built.element_str(built.product_of_basis(i, j)) << "\n";
    return {std::move(machine), human.str()};
}

}  // namespace algpencil
