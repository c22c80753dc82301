#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braid3/io.hpp"

namespace braid3 {

enum class CheckStatus { pass, fail, reported };

inline std::string_view status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::reported: return "reported";
    }
    return "?";
}

struct SuiteCheck {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::fail;
    json witness;
};

/// Ordered by check id. "reported" checks carry information only.
struct SuiteResult {
    std::vector<SuiteCheck> checks;

    int exit_code() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return 1;
        return 0;
    }
    const SuiteCheck* find(std::string_view id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

struct SuiteOptions {
    std::uint64_t seed = 20190704;
    double epsilon = 1e-9;
    /// Replaces mu(z) wherever the suite uses the constructor; a corrupted
    /// value here must make the golden checks fail.
    std::function<Representation(const Scalar&)> mu_factory;
};

/// Random rational with small numerator and denominator.
inline BigRational random_rational(std::mt19937_64& rng, int max_num = 12, int max_den = 9) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    BigRational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/// Parses a matrix of Q(z) expressions.
inline Matrix zmatrix(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> v;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (const auto& e : r) row.push_back(parse_scalar_as(e, Field::ratfunc));
        v.push_back(std::move(row));
    }
    return Matrix::from_rows(v).in_field(Field::ratfunc);
}

namespace golden {

inline Matrix burau_diag_s1() { return zmatrix({{"-z", "0"}, {"0", "1"}}); }
inline Matrix burau_diag_s2() {
    return zmatrix({{"1/(z+1)", "-z/(z+1)"}, {"-(z^2+z+1)/(z+1)", "-z^2/(z+1)"}});
}
inline Matrix tensor_s1() {
    return zmatrix({{"z^2", "0", "0", "0"}, {"-z", "-z", "0", "0"}, {"-z", "0", "-z", "0"}, {"1", "1", "1", "1"}});
}
inline Matrix tensor_s2() {
    return zmatrix({{"1", "z", "z", "z^2"}, {"0", "-z", "0", "-z^2"}, {"0", "0", "-z", "-z^2"}, {"0", "0", "0", "z^2"}});
}
inline Matrix tensor_basis() {
    return zmatrix(
        {{"0", "0", "0", "z^2+2*z+1"}, {"0", "-z-1", "-1", "-z-1"}, {"0", "0", "1", "-z-1"}, {"1", "1", "0", "1"}});
}
inline Matrix tensor_s1_conjugated() {
    return zmatrix({{"1", "0", "0", "0"}, {"0", "-z", "0", "0"}, {"0", "0", "-z", "0"}, {"0", "0", "0", "z^2"}});
}
inline Matrix tensor_s2_conjugated() {
    return zmatrix({
        {"z^4/(z+1)^2", "z^2/(z+1)^2*(z^2+z+1)", "0", "1/(z+1)^2*(z^2+z+1)^2"},
        {"2*z^3/(z+1)^2", "z*(z^2+1)/(z+1)^2", "0", "-2/(z+1)^2*(z^2+z+1)"},
        {"-z^3/(z+1)", "-z/(z+1)*(z^2+z+1)", "-z", "1/(z+1)*(z^2+z+1)"},
        {"z^2/(z+1)^2", "-z/(z+1)^2", "0", "1/(z+1)^2"},
    });
}
inline Matrix mu_s1() { return zmatrix({{"1", "0", "0"}, {"0", "-z", "0"}, {"0", "0", "z^2"}}); }
inline Matrix mu_s2() {
    return zmatrix({
        {"z^4/(z+1)^2", "z^2/(z+1)^2*(z^2+z+1)", "1/(z+1)^2*(z^2+z+1)^2"},
        {"2*z^3/(z+1)^2", "z*(z^2+1)/(z+1)^2", "-2/(z+1)^2*(z^2+z+1)"},
        {"z^2/(z+1)^2", "-z/(z+1)^2", "1/(z+1)^2"},
    });
}
inline Matrix pascal_s1() { return zmatrix({{"z^2", "0", "0"}, {"-z", "-z", "0"}, {"1", "2", "1"}}); }
inline Matrix pascal_s2() { return zmatrix({{"1", "2*z", "z^2"}, {"0", "-z", "-z^2"}, {"0", "0", "z^2"}}); }

/// Eigenvectors of the mu s2 image for eigenvalues 1, -z, z^2.
inline std::vector<std::pair<std::string, std::vector<std::string>>> mu_eigenvectors() {
    return {
        {"1", {"1", "-2", "1"}},
        {"-z", {"-1/z*(z^2+z+1)", "1/z*(z^2+1)", "1"}},
        {"z^2", {"1/z^2*(z^4+2*z^3+3*z^2+2*z+1)", "1/z*(2*z^2+2*z+2)", "1"}},
    };
}

} // namespace golden

namespace detail {

inline json matrices_json(const std::vector<Matrix>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(to_json(m));
    return a;
}

inline bool block_diagonal_1(const Matrix& m) {
    for (std::size_t k = 1; k < m.rows(); ++k)
        if (!m(0, k).is_zero() || !m(k, 0).is_zero()) return false;
    return true;
}

/// Exact check that C a(s) = b(s) C for every generator with C invertible.
inline bool is_conjugator(const Matrix& c, const Representation& a, const Representation& b) {
    if (!is_invertible(c)) return false;
    for (std::size_t i = 0; i < a.images().size(); ++i)
        if (!(c * a.image(i) == b.image(i) * c)) return false;
    return true;
}

class SuiteRunner {
public:
    explicit SuiteRunner(SuiteOptions opts) : opts_(std::move(opts)), z_(Scalar::z()) {
        if (!opts_.mu_factory) opts_.mu_factory = [](const Scalar& z) { return braid3::mu(z); };
    }

    SuiteResult run() {
        const double saved = float_epsilon();
        set_float_epsilon(opts_.epsilon);
        add("ac01_braid_relations", "braid relation holds exactly for every named family (symbolic z), < 1 s",
            [&](json& w) { return braid_relations(w); });
        add("ac02_burau_diagonalization", "conjugating Burau by [[-(z+1),0],[1,1]] gives the diagonal form",
            [&](json& w) { return diagonalization(w); });
        add("ac03a_tensor_square", "Burau tensor square images equal the reference 4x4 matrices",
            [&](json& w) { return tensor_square(w); });
        add("ac03b_tensor_conjugated", "conjugating the tensor square by the reference basis gives the reference matrices",
            [&](json& w) { return tensor_conjugated(w); });
        add("ac03c_quotient_block", "deleting row/column 3 yields the reference mu(z) matrices",
            [&](json& w) { return quotient_block(w); });
        add("ac04_mu_eigenvectors", "kernels of D - l*I for l in {1, -z, z^2} match the reference eigenvectors",
            [&](json& w) { return eigenvectors(w); });
        add("ac05_decomposition", "tensor square = xi(-z) (+) block isomorphic to mu(z), exactly",
            [&](json& w) { return decomposition(w); });
        add("ac06_irreducibility_locus", "mu irreducible symbolically and at 100 random rationals; reducible at 1, omega",
            [&](json& w) { return irreducibility_locus(w); });
        add("ac07_specialization_at_one", "z = 1: line (3,0,1), xi(1) (+) standard, involutions, trace identity",
            [&](json& w) { return at_one(w); });
        add("ac08_pascal_form", "Pascal-pattern matrices match and are isomorphic to mu(z)",
            [&](json& w) { return pascal(w); });
        add("ac09_two_dim_families", "fg product, f-scaling by diag(1,t), family (ii) irreducible, (i) at omega",
            [&](json& w) { return families(w); });
        add("ac10_schur", "self-intertwiners are exactly one-dimensional for irreducible families",
            [&](json& w) { return schur(w); });
        add("ac11_exact_float", "float specialization agrees with exact specialization at 50 random points",
            [&](json& w) { return exact_float(w); });
        add("ac12_negative_controls", "perturbed representation fails; Burau has no invariant line",
            [&](json& w) { return negative_controls(w); });
        report("rq01_burau_diag_at_one", "diagonalization of Burau at z = 1",
               [&](json& w) { burau_diag_at_one(w); });
        report("rq02_thm1_i_at_omega", "family (i) at z = omega (outside the irreducible list)",
               [&](json& w) { thm1_i_at_omega(w); });
        set_float_epsilon(saved);
        std::sort(result_.checks.begin(), result_.checks.end(),
                  [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
        return std::move(result_);
    }

private:
    Representation mu(const Scalar& z) const { return opts_.mu_factory(z); }

    void add(std::string id, std::string description, const std::function<bool(json&)>& body) {
        SuiteCheck c{std::move(id), std::move(description), CheckStatus::fail, json::object()};
        try {
            c.status = body(c.witness) ? CheckStatus::pass : CheckStatus::fail;
        } catch (const std::exception& e) {
            c.witness["error"] = e.what();
        }
        result_.checks.push_back(std::move(c));
    }

    void report(std::string id, std::string description, const std::function<void(json&)>& body) {
        SuiteCheck c{std::move(id), std::move(description), CheckStatus::reported, json::object()};
        try {
            body(c.witness);
        } catch (const std::exception& e) {
            c.witness["error"] = e.what();
        }
        result_.checks.push_back(std::move(c));
    }

    std::vector<Representation> symbolic_families() const {
        Scalar one(1);
        return {
            burau3(z_),
            burau3_diag(z_),
            mu(z_),
            mu_pascal(z_),
            theorem1_i(z_, -z_ / (z_ + Scalar::one(Field::ratfunc))),
            theorem1_i(z_, one),
            theorem1_i(z_, z_),
            theorem1_ii(z_, Scalar(0)),
            theorem1_ii(z_, one),
            theorem1_ii(z_, Scalar(2)),
            theorem1_ii(z_, Scalar(-1)),
            xi(z_),
            xi(-z_),
        };
    }

    bool braid_relations(json& w) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        json fams = json::array();
        for (const auto& r : symbolic_families()) {
            bool holds = verify_braid_relations(r).overall;
            ok = ok && holds;
            fams.push_back({{"family", r.meta().label}, {"holds", holds}});
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        w["families"] = fams;
        w["within_time_budget"] = secs < 1.0;
        return ok && secs < 1.0;
    }

    bool diagonalization(json& w) {
        Representation conj = conjugate(burau_diagonalizer(z_), burau3(z_));
        w["images"] = matrices_json(conj.images());
        return conj.image(0) == golden::burau_diag_s1() && conj.image(1) == golden::burau_diag_s2() &&
               burau3_diag(z_) == conj;
    }

    Representation tensor_square() const { return tensor(burau3(z_), burau3(z_)); }

    bool tensor_square(json& w) {
        Representation t = tensor_square();
        w["images"] = matrices_json(t.images());
        return t.image(0) == golden::tensor_s1() && t.image(1) == golden::tensor_s2();
    }

    bool tensor_conjugated(json& w) {
        Representation c = conjugate(golden::tensor_basis(), tensor_square());
        w["images"] = matrices_json(c.images());
        return c.image(0) == golden::tensor_s1_conjugated() && c.image(1) == golden::tensor_s2_conjugated();
    }

    bool quotient_block(json& w) {
        Representation c = conjugate(golden::tensor_basis(), tensor_square());
        Matrix q1 = delete_row_col(c.image(0), 2);
        Matrix q2 = delete_row_col(c.image(1), 2);
        Representation m = mu(z_);
        w["quotient"] = matrices_json({q1, q2});
        bool golden_ok = q1 == golden::mu_s1() && q2 == golden::mu_s2();
        bool constructor = m.image(0) == golden::mu_s1() && m.image(1) == golden::mu_s2();
        w["matches_golden"] = golden_ok;
        w["constructor_matches_golden"] = constructor;
        return golden_ok && constructor;
    }

    bool eigenvectors(json& w) {
        const Matrix d = mu(z_).image(1);
        bool ok = true;
        json found = json::array();
        for (const auto& [lam_text, vec] : golden::mu_eigenvectors()) {
            Scalar lam = parse_scalar_as(lam_text, Field::ratfunc);
            KernelBasis k = kernel(d - lam * Matrix::identity(3, Field::ratfunc));
            std::vector<Scalar> entries;
            for (const auto& e : vec) entries.push_back(parse_scalar_as(e, Field::ratfunc));
            Matrix expected = normalize_leading_one(Matrix::column(entries));
            bool match = k.dimension() == 1 && k.vectors[0] == expected;
            ok = ok && match;
            json item = {{"eigenvalue", lam_text}, {"match", match}};
            if (!k.empty()) item["vector"] = to_json(k.vectors[0]);
            found.push_back(item);
        }
        w["eigenvectors"] = found;
        return ok;
    }

    bool decomposition(json& w) {
        Representation t = tensor_square();
        DecompositionReport d = split_once(t);
        w["report"] = to_json(d);
        bool line_is_xi = d.blocks.size() == 2 && d.blocks[0] == xi(-z_);
        bool block_diag = true;
        for (const auto& m : t.images()) block_diag = block_diag && block_diagonal_1(conjugate(d.basis_change, m));
        IsomorphismResult iso = is_isomorphic(d.blocks.at(1), mu(z_), {opts_.seed, 32});
        bool iso_ok = iso.verdict == Verdict::isomorphic && iso.conjugator &&
                      is_conjugator(*iso.conjugator, d.blocks.at(1), mu(z_));
        if (iso.conjugator) w["conjugator"] = to_json(*iso.conjugator);
        return line_is_xi && block_diag && iso_ok;
    }

    bool irreducibility_locus(json& w) {
        auto start = std::chrono::steady_clock::now();
        Representation m = mu(z_);
        bool symbolic = is_irreducible(m).irreducible;
        bool at_one = is_irreducible(specialize(m, Scalar(1))).irreducible;
        bool at_omega = is_irreducible(specialize(m, Scalar::omega())).irreducible;
        std::mt19937_64 rng(opts_.seed);
        int checked = 0;
        bool sweep = true;
        json failures = json::array();
        while (checked < 100) {
            BigRational q = random_rational(rng);
            if (q == 0 || q == -1 || q == 1) continue;
            ++checked;
            if (!is_irreducible(specialize(m, Scalar(q))).irreducible) {
                sweep = false;
                failures.push_back(q.get_str());
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        w["symbolic"] = symbolic;
        w["at_1"] = at_one;
        w["at_omega"] = at_omega;
        w["random_points"] = checked;
        w["random_failures"] = failures;
        w["within_time_budget"] = secs < 5.0;
        return symbolic && !at_one && !at_omega && sweep && secs < 5.0;
    }

    bool at_one(json& w) {
        Representation m1 = specialize(mu(z_), Scalar(1));
        auto lines = common_invariant_lines(m1, Side::right);
        Matrix expected = normalize_leading_one(Matrix::column({Scalar(3), Scalar(0), Scalar(1)}));
        bool line = lines.size() == 1 && lines[0].vector == expected && lines[0].eigenvalue == Scalar(1);
        if (!lines.empty()) w["line"] = to_json(lines[0]);

        DecompositionReport d = split_once(m1);
        Representation rho = specialize(burau3(z_), Scalar(1));
        bool split = d.blocks[0] == xi(Scalar(1)) &&
                     is_isomorphic(d.blocks[1], rho, {opts_.seed, 32}).verdict == Verdict::isomorphic;
        w["split"] = to_json(d);

        Matrix id = Matrix::identity(2, Field::rational);
        bool involutions = rho.image(0) * rho.image(0) == id && rho.image(1) * rho.image(1) == id;

        // rho (x) rho = rho + sign + trivial, compared on traces.
        Representation square = tensor(rho, rho);
        Representation sign = xi(Scalar(-1));
        bool traces = true;
        json tr = json::array();
        for (const auto& word : std::vector<std::vector<int>>{{1}, {2}, {1, 2}}) {
            Scalar lhs = trace(square.word(word));
            Scalar rhs = trace(rho.word(word)) + trace(sign.word(word)) + Scalar(1);
            traces = traces && lhs == rhs;
            tr.push_back({{"word", word}, {"tensor_trace", to_string(lhs)}, {"sum_trace", to_string(rhs)}});
        }
        w["traces"] = tr;
        w["line_found"] = line;
        w["split_ok"] = split;
        w["involutions"] = involutions;
        return line && split && involutions && traces;
    }

    bool pascal(json& w) {
        Representation p = mu_pascal(z_);
        bool golden_ok = p.image(0) == golden::pascal_s1() && p.image(1) == golden::pascal_s2();
        IsomorphismResult iso = is_isomorphic(mu(z_), p, {opts_.seed, 32});
        bool ok = iso.verdict == Verdict::isomorphic && iso.conjugator && is_conjugator(*iso.conjugator, mu(z_), p);
        if (iso.conjugator) w["conjugator"] = to_json(*iso.conjugator);
        w["matches_golden"] = golden_ok;
        return golden_ok && ok;
    }

    bool families(json& w) {
        const Scalar one = Scalar::one(Field::ratfunc);
        const Scalar target = z_ * (z_ * z_ + z_ + one) / ((z_ + one) * (z_ + one));
        bool product = true;
        for (const Scalar& f : {-z_ / (z_ + one), one, z_, z_ * z_ - Scalar::constant(3, Field::ratfunc)}) {
            const Matrix s2 = theorem1_i(z_, f).image(1);
            product = product && s2(0, 1) * s2(1, 0) == target;
        }
        std::mt19937_64 rng(opts_.seed ^ 0x9e3779b97f4a7c15ULL);
        bool scaling = true;
        int done = 0;
        const Scalar f0 = -z_ / (z_ + one);
        while (done < 20) {
            BigRational t = random_rational(rng);
            if (t == 0) continue;
            ++done;
            Scalar ts = Scalar::constant(t, Field::ratfunc);
            Matrix p = Matrix::diagonal({one, ts});
            scaling = scaling && conjugate(p, theorem1_i(z_, f0)) == theorem1_i(z_, ts * f0);
        }
        bool family_ii = true;
        for (int e : {0, 1, 2, -1}) family_ii = family_ii && is_irreducible(theorem1_ii(z_, Scalar(e))).irreducible;
        for (int k = 0; k < 10; ++k) {
            BigRational zq = random_rational(rng);
            if (zq == 0) zq = 1;
            family_ii = family_ii && is_irreducible(theorem1_ii(Scalar(zq), Scalar(random_rational(rng)))).irreducible;
        }
        bool omega_reducible = !is_irreducible(theorem1_i(Scalar::omega(), Scalar(1))).irreducible;
        w["fg_product"] = product;
        w["f_scaling"] = scaling;
        w["family_ii_irreducible"] = family_ii;
        w["family_i_reducible_at_omega"] = omega_reducible;
        return product && scaling && family_ii && omega_reducible;
    }

    bool schur(json& w) {
        bool ok = true;
        for (const auto& r : {burau3(z_), mu(z_), theorem1_ii(z_, Scalar(0))}) {
            auto dim = intertwiners(r, r).size();
            w[r.meta().label] = dim;
            ok = ok && dim == 1;
        }
        return ok;
    }

    bool exact_float(json& w) {
        std::mt19937_64 rng(opts_.seed + 11);
        std::vector<Representation> fams{burau3(z_), mu(z_), theorem1_i(z_, Scalar(1)), theorem1_ii(z_, Scalar(2))};
        int points = 0;
        bool ok = true;
        json bad = json::array();
        while (points < 50) {
            BigRational q = random_rational(rng);
            if (q == 0 || q == -1) continue;
            ++points;
            for (const auto& r : fams) {
                Representation ex = specialize(r, Scalar(q));
                Representation fl = specialize(r, Scalar(Complex(q.get_d(), 0.0)));
                bool agree = verify_braid_relations(ex).overall == verify_braid_relations(fl).overall;
                for (std::size_t i = 0; i < ex.images().size(); ++i)
                    for (std::size_t k = 0; k < ex.image(i).entries().size(); ++k)
                        agree = agree && approx_equal(fl.image(i).entries()[k].to_complex(),
                                                      ex.image(i).entries()[k].to_complex(), opts_.epsilon);
                if (!agree) bad.push_back({{"family", r.meta().label}, {"z", q.get_str()}});
                ok = ok && agree;
            }
        }
        w["points"] = points;
        w["disagreements"] = bad;
        return ok;
    }

    bool negative_controls(json& w) {
        Representation raw = Representation::raw(3, {Matrix::diagonal({-z_, Scalar(1)}), Matrix::identity(2, Field::ratfunc)});
        bool rejected = !verify_braid_relations(raw).overall;
        bool no_line = false;
        try {
            split_once(burau3(z_));
        } catch (const DecompositionError& e) {
            no_line = std::string(e.what()) == "no 1-dim invariant subspace";
            w["burau_split"] = e.what();
        }
        w["perturbed_rejected"] = rejected;
        return rejected && no_line;
    }

    void burau_diag_at_one(json& w) {
        Scalar one(1);
        Representation conj = conjugate(burau_diagonalizer(one), burau3(one));
        w["diagonalizer_invertible"] = is_invertible(burau_diagonalizer(one));
        w["matches_diag_form"] = conj == burau3_diag(one);
        w["diagonalizer_singular_at_minus_one"] = !is_invertible(burau_diagonalizer(Scalar(-1)));
        w["note"] = "the diagonalization needs only z != -1; z = 1 is accepted";
    }

    void thm1_i_at_omega(json& w) {
        Representation r = theorem1_i(Scalar::omega(), Scalar(1));
        IrreducibilityResult ir = is_irreducible(r);
        w["irreducible"] = ir.irreducible;
        w["reason"] = ir.reason;
        if (ir.witness) w["witness"] = to_json(*ir.witness);
        w["images"] = matrices_json(r.images());
    }

    SuiteOptions opts_;
    Scalar z_;
    SuiteResult result_;
};

} // namespace detail

inline SuiteResult run_suite(SuiteOptions opts = {}) { return detail::SuiteRunner(std::move(opts)).run(); }

inline json to_json(const SuiteResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"id", c.id}, {"description", c.description}, {"status", status_name(c.status)}, {"witness", c.witness}});
    return {{"checks", checks}, {"exit_code", r.exit_code()}};
}

inline std::string text(const SuiteResult& r) {
    std::string out;
    int pass = 0, fail = 0, reported = 0;
    for (const auto& c : r.checks) {
        std::string tag = c.status == CheckStatus::pass ? "PASS    " : c.status == CheckStatus::fail ? "FAIL    " : "REPORT  ";
        out += tag + c.id + "  " + c.description + "\n";
        if (c.status == CheckStatus::fail && c.witness.contains("error"))
            out += "        error: " + c.witness["error"].get<std::string>() + "\n";
        (c.status == CheckStatus::pass ? pass : c.status == CheckStatus::fail ? fail : reported)++;
    }
    out += std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(reported) +
           " reported\n";
    return out;
}

} // namespace braid3
