#include "hochex/report.hpp"

#include <exception>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hochex/algebra.hpp"
#include "hochex/bar.hpp"
#include "hochex/cocycle.hpp"
#include "hochex/extension.hpp"
#include "hochex/forms.hpp"
#include "hochex/homology.hpp"
#include "hochex/parallel.hpp"
#include "hochex/quiver.hpp"

namespace hochex {

namespace {

CommandResult usage_error(const std::string& msg) {
    CommandResult r;
    r.exit_code = 2;
    r.text = "error: " + msg + "\n";
    r.json = Json{{"schema", 1}, {"error", msg}};
    return r;
}

CommandResult check_failure(const std::string& msg) {
    CommandResult r;
    r.exit_code = 1;
    r.text = "failure: " + msg + "\n";
    r.json = Json{{"schema", 1}, {"error", msg}};
    return r;
}

struct Config {
    std::size_t s = 0;
    std::size_t n = 0;
    FieldSpec fs;
};

Config common_config(const RunConfig& cfg) {
    if (cfg.vertices < 1)
        throw std::invalid_argument("--vertices must be at least 1");
    if (cfg.truncation < 2)
        throw std::invalid_argument("--truncation must be at least 2");
    return Config{cfg.vertices, cfg.truncation, make_field(cfg.characteristic)};
}

std::string vec_str(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + "]";
}

Json scalar_array(const Vec& v) {
    Json a = Json::array();
    for (const Scalar& c : v) a.push_back(c.str());
    return a;
}

Json counts_json(const ArrowCountMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

// "2*(a0.a1)* - (e1)*" style rendering of a dual element.
std::string dual_str(const TruncatedAlgebra& A, const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const std::string p = "(" + path_str(A.basis()[i]) + ")*";
        std::string term;
        if (v[i].is_one())
            term = p;
        else if ((-v[i]).is_one())
            term = "-" + p;
        else
            term = v[i].str() + "*" + p;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? std::string("0") : out;
}

struct Check {
    std::string name;
    std::string skip;  // nonempty: reported as skipped, run is not called
    std::function<std::pair<bool, std::string>()> run;
};

struct CheckRow {
    std::string name;
    char status = 'F';  // 'P' pass, 'F' fail, 'S' skip
    std::string detail;
};

std::vector<CheckRow> run_checks(const std::vector<Check>& checks) {
    std::vector<CheckRow> rows(checks.size());
    parallel_for(checks.size(), [&](std::size_t i) {
        const Check& c = checks[i];
        if (!c.run) {
            rows[i] = CheckRow{c.name, 'S', c.skip};
            return;
        }
        try {
            auto [ok, detail] = c.run();
            rows[i] = CheckRow{c.name, ok ? 'P' : 'F', std::move(detail)};
        } catch (const std::exception& e) {
            rows[i] = CheckRow{c.name, 'F', std::string("exception: ") + e.what()};
        }
    });
    return rows;
}

}  // namespace

std::string render(const CommandResult& r, OutputFormat f) {
    if (f == OutputFormat::Json) return r.json.dump(2) + "\n";
    return r.text;
}

std::vector<Vec> coefficient_patterns(std::size_t m, const FieldSpec& fs) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < m; ++i) {
        Vec e = zero_vec(m, fs);
        e[i] = Scalar::one(fs);
        out.push_back(std::move(e));
    }
    if (m > 1) out.push_back(Vec(m, Scalar::one(fs)));
    return out;
}

std::vector<std::string> split_coefficients(const std::string& text) {
    auto trim = [](const std::string& t) {
        const auto b = t.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const auto e = t.find_last_not_of(" \t");
        return t.substr(b, e - b + 1);
    };
    std::vector<std::string> out;
    std::string cur;
    bool saw_comma = false;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
            saw_comma = true;
        } else {
            cur += ch;
        }
    }
    cur = trim(cur);
    if (saw_comma || !cur.empty()) out.push_back(cur);
    return out;
}

CommandResult cmd_homology(const RunConfig& cfg) {
    Config c;
    try {
        c = common_config(cfg);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    const Quiver quiv = cyclic_quiver(c.s);
    const TruncatedAlgebra A = TruncatedAlgebra::create(quiv, c.n, c.fs);

    CommandResult r;
    std::ostringstream os;
    os << "homology: s=" << c.s << " n=" << c.n << " char="
       << c.fs.characteristic << "\n";
    os << "  q  computed  formula  match\n";
    Json rows = Json::array();
    bool all = true;
    for (std::size_t q = 1; q <= 2 * c.n; ++q) {
        const std::size_t comp = hh2_dimension(A, q);
        const std::size_t form = hh2_formula(quiv, c.n, q, c.fs);
        const bool match = comp == form;
        all = all && match;
        os << std::setw(3) << q << "  " << std::setw(8) << comp << "  "
           << std::setw(7) << form << "  " << (match ? "yes" : "NO") << "\n";
        rows.push_back(Json{{"q", q},
                            {"computed", comp},
                            {"formula", form},
                            {"match", match}});
    }
    os << (all ? "all rows match\n" : "MISMATCH between computed and formula\n");
    r.text = os.str();
    r.json = Json{{"schema", 1},       {"command", "homology"},
                  {"s", c.s},          {"n", c.n},
                  {"char", c.fs.characteristic}, {"rows", rows},
                  {"all_match", all}};
    r.exit_code = all ? 0 : 1;
    return r;
}

CommandResult cmd_extend(const RunConfig& cfg) {
    Config c;
    try {
        c = common_config(cfg);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    if (!cfg.degree)
        return usage_error(
            "extend requires --degree (a multiple of the vertex count s "
            "between n and 2n-1)");
    const std::size_t s = c.s, n = c.n, q = *cfg.degree;
    if (q % s != 0 || q < n || q > 2 * n - 1)
        return usage_error(
            "degree " + std::to_string(q) + " is invalid: classes live in " +
            "degrees q with q a multiple of " + std::to_string(s) + " and " +
            std::to_string(n) + " <= q <= " + std::to_string(2 * n - 1));

    const TruncatedAlgebra A = TruncatedAlgebra::create(cyclic_quiver(s), n, c.fs);
    const std::vector<Vec> basis = dual_hh2_basis(A, q);
    Vec coeffs;
    try {
        for (const std::string& t : cfg.coefficients)
            coeffs.push_back(Scalar::parse(t, c.fs));
    } catch (const std::exception& e) {
        return usage_error(std::string("bad --coeffs value: ") + e.what());
    }
    if (coeffs.size() != basis.size())
        return usage_error("--coeffs needs exactly " +
                           std::to_string(basis.size()) +
                           " value(s) in degree " + std::to_string(q) +
                           " (got " + std::to_string(coeffs.size()) + ")");

    QuiverVerdict v;
    try {
        v = theorem44_verdict(s, n, q, c.fs, coeffs);
    } catch (const std::exception& e) {
        return check_failure(std::string("internal cross-check failed: ") +
                             e.what());
    }

    Vec u = zero_vec(slice_basis(A, 2, q).size(), c.fs);
    for (std::size_t i = 0; i < basis.size(); ++i)
        add_scaled(u, coeffs[i], basis[i]);
    const Cocycle alpha = theta(A, q, u);

    CommandResult r;
    std::ostringstream os;
    os << "extend: s=" << s << " n=" << n << " q=" << q << " char="
       << c.fs.characteristic << " coeffs=" << vec_str(coeffs) << "\n";
    if (v.zero_class)
        os << "warning: the chosen class is zero (a coboundary); the "
              "extension is isomorphic to the trivial one\n";
    os << "cocycle values on basis-path pairs (zero pairs omitted):\n";
    Json table = Json::array();
    bool any = false;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const Vec& val = alpha.value(i, j);
            if (val.empty() || is_zero_vec(val)) continue;
            any = true;
            const std::string a = path_str(A.basis()[i]);
            const std::string b = path_str(A.basis()[j]);
            const std::string d = dual_str(A, val);
            os << "  alpha(" << a << ", " << b << ") = " << d << "\n";
            table.push_back(Json{{"a", a}, {"b", b}, {"value", d}});
        }
    if (!any) os << "  (none)\n";
    os << "quiver arrow counts of T: " << counts_str(v.counts) << "\n";
    os << "verdict: " << verdict_str(v.kind) << "\n";
    os << "radical values contained in J.D(A) + D(A).J: "
       << (v.lemma42 ? "true" : "false") << "\n";
    os << "zero class (coboundary): " << (v.zero_class ? "true" : "false")
       << "\n";
    os << "dim T = " << v.dim_T << "\n";
    r.text = os.str();

    r.json = Json{{"schema", 1},
                  {"command", "extend"},
                  {"s", s},
                  {"n", n},
                  {"q", q},
                  {"char", c.fs.characteristic},
                  {"coefficients", scalar_array(coeffs)},
                  {"quiver_counts", counts_json(v.counts)},
                  {"verdict", verdict_str(v.kind)},
                  {"lemma42", v.lemma42},
                  {"dim_T", v.dim_T},
                  {"zero_class", v.zero_class}};
    if (v.zero_class) r.json["warning"] = "zero class: T is a trivial extension";
    r.json["cocycle"] = table;
    r.exit_code = 0;
    return r;
}

CommandResult cmd_oracle(const RunConfig& cfg) {
    Config c;
    try {
        c = common_config(cfg);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    const std::size_t dimA = c.s * c.n;
    if (dimA > 12)
        return usage_error("oracle refuses dim A = " + std::to_string(dimA) +
                           " > 12: the tuple complexes grow as (dim A)^4");
    const Quiver quiv = cyclic_quiver(c.s);
    const TruncatedAlgebra A = TruncatedAlgebra::create(quiv, c.n, c.fs);
    const std::size_t h2 = bar_h2_dim(A);
    const std::size_t hh2 = bar_hh2_dim(A);
    std::size_t graded = 0;
    for (std::size_t q = 1; q <= 2 * c.n; ++q) graded += hh2_dimension(A, q);
    const bool agree = h2 == hh2 && hh2 == graded;

    CommandResult r;
    std::ostringstream os;
    os << "oracle: s=" << c.s << " n=" << c.n << " char="
       << c.fs.characteristic << "\n";
    os << "  dim H^2(A, D(A))   (cochain ranks) = " << h2 << "\n";
    os << "  dim HH_2(A)        (chain ranks)   = " << hh2 << "\n";
    os << "  sum_q dim HH_{2,q} (graded slices) = " << graded << "\n";
    os << (agree ? "all three agree\n" : "DISAGREEMENT\n");
    r.text = os.str();
    r.json = Json{{"schema", 1},
                  {"command", "oracle"},
                  {"s", c.s},
                  {"n", c.n},
                  {"char", c.fs.characteristic},
                  {"h2_bar", h2},
                  {"hh2_bar", hh2},
                  {"hh2_skoldberg_sum", graded},
                  {"agree", agree}};
    r.exit_code = agree ? 0 : 1;
    return r;
}

CommandResult cmd_verify(const RunConfig& cfg) {
    Config c;
    try {
        c = common_config(cfg);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    const std::size_t s = c.s, n = c.n;
    const FieldSpec fs = c.fs;
    const unsigned long long seed = cfg.seed;
    const std::size_t samples = cfg.samples;

    const Quiver quiv = cyclic_quiver(s);
    const TruncatedAlgebra A0 = TruncatedAlgebra::create(quiv, n, fs);
    const ArrowCountMatrix NA = arrow_counts(quiv);
    const ArrowCountMatrix NT0 = trivial_extension_counts(A0);
    const std::size_t dimT = 2 * A0.dim();

    std::vector<Check> checks;

    // Rank-computed dimensions against the closed formula, all degrees.
    checks.push_back(Check{"formula agreement", "", [s, n, fs]() {
        const Quiver qv = cyclic_quiver(s);
        const TruncatedAlgebra A = TruncatedAlgebra::create(qv, n, fs);
        std::string nz;
        for (std::size_t q = 1; q <= 2 * n; ++q) {
            const std::size_t comp = hh2_dimension(A, q);
            const std::size_t form = hh2_formula(qv, n, q, fs);
            if (comp != form)
                return std::make_pair(
                    false, "mismatch at q=" + std::to_string(q) + ": computed " +
                               std::to_string(comp) + ", formula " +
                               std::to_string(form));
            if (comp)
                nz += (nz.empty() ? "" : ", ") +
                      ("q=" + std::to_string(q) + " -> " + std::to_string(comp));
        }
        return std::make_pair(true, nz.empty() ? std::string("all degrees zero")
                                               : "nonzero: " + nz);
    }});

    // Every valid degree x deterministic nonzero coefficient pattern.
    for (std::size_t q = n; q <= 2 * n - 1; ++q) {
        if (q % s != 0) continue;
        const std::size_t m = dual_hh2_basis(A0, q).size();
        if (m == 0) {
            checks.push_back(Check{"degree q=" + std::to_string(q),
                                   "no nonzero classes in this degree",
                                   nullptr});
            continue;
        }
        for (const Vec& pat : coefficient_patterns(m, fs)) {
            const std::string nm =
                "degree q=" + std::to_string(q) + " coeffs=" + vec_str(pat);
            checks.push_back(Check{
                nm, "", [s, n, q, fs, pat, NA, NT0, dimT]() {
                    const Quiver qv = cyclic_quiver(s);
                    const TruncatedAlgebra A =
                        TruncatedAlgebra::create(qv, n, fs);
                    const std::vector<Vec> basis = dual_hh2_basis(A, q);
                    Vec u = zero_vec(slice_basis(A, 2, q).size(), fs);
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        add_scaled(u, pat[i], basis[i]);
                    const Cocycle alpha = theta(A, q, u);
                    if (!cocycle_check(alpha))
                        return std::make_pair(false,
                                              std::string("cocycle identity fails"));
                    if (!vanishes_on_idempotents(alpha))
                        return std::make_pair(
                            false, std::string("nonzero on an idempotent pair"));
                    const ExtensionAlgebra T = ExtensionAlgebra::create(A, alpha);
                    const auto powers = radical_power_dims(T);
                    if (powers.size() + 1 > 2 * n)
                        return std::make_pair(
                            false, "radical nilpotency index " +
                                       std::to_string(powers.size() + 1) +
                                       " exceeds 2n");
                    const QuiverVerdict v = theorem44_verdict(s, n, q, fs, pat);
                    const auto expect = (q == 2 * n - 1)
                                            ? QuiverVerdict::BASE
                                            : QuiverVerdict::TRIVIAL_EXT;
                    if (v.kind != expect)
                        return std::make_pair(
                            false, "verdict " + verdict_str(v.kind) +
                                       ", expected " + verdict_str(expect));
                    if (v.zero_class)
                        return std::make_pair(
                            false,
                            std::string(
                                "nonzero coefficients gave a coboundary class"));
                    if (v.lemma42 != (q <= 2 * n - 2))
                        return std::make_pair(
                            false,
                            std::string("radical-containment flag is ") +
                                (v.lemma42 ? "true" : "false") +
                                ", expected the opposite");
                    if (v.dim_T != dimT)
                        return std::make_pair(false,
                                              "dim T = " + std::to_string(v.dim_T) +
                                                  " != " + std::to_string(dimT));
                    if (!counts_leq(NA, v.counts) || !counts_leq(v.counts, NT0))
                        return std::make_pair(
                            false,
                            "arrow counts " + counts_str(v.counts) +
                                " escape the base/trivial sandwich");
                    return std::make_pair(true, "verdict=" + verdict_str(v.kind) +
                                                    " counts=" +
                                                    counts_str(v.counts));
                }});
        }
    }

    // Tuple-complex oracle, gated by algebra size.
    if (A0.dim() > 12) {
        checks.push_back(Check{"duality oracle",
                               "dim A = " + std::to_string(A0.dim()) +
                                   " exceeds the oracle bound 12",
                               nullptr});
    } else {
        checks.push_back(Check{"duality oracle", "", [s, n, fs]() {
            const Quiver qv = cyclic_quiver(s);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, n, fs);
            const std::size_t h2 = bar_h2_dim(A);
            const std::size_t hh2 = bar_hh2_dim(A);
            std::size_t graded = 0;
            for (std::size_t q = 1; q <= 2 * n; ++q)
                graded += hh2_dimension(A, q);
            const std::string detail = "h2=" + std::to_string(h2) +
                                       " hh2=" + std::to_string(hh2) +
                                       " graded-sum=" + std::to_string(graded);
            return std::make_pair(h2 == hh2 && hh2 == graded, detail);
        }});
    }

    // Worked fixtures on the three-vertex cyclic quiver.
    if (s == 3 && n == 4) {
        checks.push_back(Check{"fixture n=4: homology profile", "", [fs]() {
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 4, fs);
            for (std::size_t q = 1; q <= 8; ++q) {
                const std::size_t want = (q == 6) ? 1 : 0;
                if (hh2_dimension(A, q) != want)
                    return std::make_pair(false,
                                          "unexpected dimension at q=" +
                                              std::to_string(q));
            }
            return std::make_pair(true,
                                  std::string("only q=6 is nonzero, dim 1"));
        }});
        checks.push_back(Check{
            "fixture n=4: twisted presentation", "", [fs, NT0]() {
                const Quiver qv = cyclic_quiver(3);
                const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 4, fs);
                const std::vector<Vec> basis = dual_hh2_basis(A, 6);
                if (basis.size() != 1)
                    return std::make_pair(false,
                                          std::string("class space is not 1-dimensional"));
                const Cocycle alpha = theta(A, 6, basis[0]);
                const ExtensionAlgebra T = ExtensionAlgebra::create(A, alpha);
                if (T.dim() != 24)
                    return std::make_pair(false, std::string("dim T != 24"));
                if (gabriel_quiver(T) != NT0)
                    return std::make_pair(
                        false,
                        std::string("quiver differs from the trivial extension's"));
                const PresentationReport pr =
                    verify_presentation(T, presentation_s3n4(fs, true));
                if (!pr.ok)
                    return std::make_pair(false, "not realized: " + pr.detail);
                return std::make_pair(true, pr.detail);
            }});
        checks.push_back(Check{"fixture n=4: trivial presentation", "", [fs]() {
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 4, fs);
            const Cocycle zero(A);
            const ExtensionAlgebra T0 = ExtensionAlgebra::create(A, zero);
            const PresentationReport pr =
                verify_presentation(T0, presentation_s3n4(fs, false));
            if (!pr.ok) return std::make_pair(false, "not realized: " + pr.detail);
            return std::make_pair(true, pr.detail);
        }});
    }
    if (s == 3 && n == 3) {
        checks.push_back(Check{"fixture n=3: class dimension", "", [fs]() {
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 3, fs);
            const std::size_t d = dual_hh2_basis(A, 3).size();
            if (d != 2 || hh2_dimension(A, 3) != 2)
                return std::make_pair(false,
                                      "degree-3 class space has dimension " +
                                          std::to_string(d) + ", expected 2");
            return std::make_pair(true, std::string("dim = 2"));
        }});
        const int kpairs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
        for (const auto& kp : kpairs) {
            const int k1 = kp[0], k2 = kp[1];
            const std::string nm = "fixture n=3: presentation k=(" +
                                   std::to_string(k1) + "," +
                                   std::to_string(k2) + ")";
            checks.push_back(Check{nm, "", [fs, k1, k2, NT0]() {
                const Quiver qv = cyclic_quiver(3);
                const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 3, fs);
                const std::vector<Vec> basis = dual_hh2_basis(A, 3);
                if (basis.size() != 2)
                    return std::make_pair(false,
                                          std::string("class space is not 2-dimensional"));
                Vec u = zero_vec(slice_basis(A, 2, 3).size(), fs);
                add_scaled(u, Scalar::from_int(k1, fs), basis[0]);
                add_scaled(u, Scalar::from_int(k2, fs), basis[1]);
                const Cocycle alpha = theta(A, 3, u);
                const ExtensionAlgebra T = ExtensionAlgebra::create(A, alpha);
                if (gabriel_quiver(T) != NT0)
                    return std::make_pair(
                        false,
                        std::string("quiver differs from the trivial extension's"));
                const PresentationReport pr = verify_presentation(
                    T, presentation_s3n3(fs, Scalar::from_int(k1, fs),
                                         Scalar::from_int(k2, fs)));
                if (!pr.ok)
                    return std::make_pair(false, "not realized: " + pr.detail);
                return std::make_pair(true, pr.detail);
            }});
        }
        checks.push_back(Check{"fixture n=3: classes are independent", "", [fs]() {
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 3, fs);
            const std::vector<Vec> basis = dual_hh2_basis(A, 3);
            if (basis.size() != 2)
                return std::make_pair(false,
                                      std::string("class space is not 2-dimensional"));
            const Cocycle diff = theta(A, 3, sub_vec(basis[0], basis[1]));
            if (is_coboundary(diff).has_value())
                return std::make_pair(
                    false,
                    std::string("difference of the two classes is a coboundary"));
            return std::make_pair(true,
                                  std::string("difference is not a coboundary"));
        }});
        checks.push_back(Check{"fixture n=3: trivial presentation", "", [fs]() {
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 3, fs);
            const Cocycle zero(A);
            const ExtensionAlgebra T0 = ExtensionAlgebra::create(A, zero);
            const PresentationReport pr =
                verify_presentation(T0, presentation_s3n3_trivial(fs));
            if (!pr.ok) return std::make_pair(false, "not realized: " + pr.detail);
            return std::make_pair(true, pr.detail);
        }});
    }
    if (s == 3 && n == 2) {
        checks.push_back(Check{"fixture n=2: base presentation", "", [fs, NA]() {
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 2, fs);
            const std::vector<Vec> basis = dual_hh2_basis(A, 3);
            if (basis.size() != 1)
                return std::make_pair(false,
                                      std::string("class space is not 1-dimensional"));
            const Cocycle alpha = theta(A, 3, basis[0]);
            const ExtensionAlgebra T = ExtensionAlgebra::create(A, alpha);
            if (gabriel_quiver(T) != NA)
                return std::make_pair(false,
                                      std::string("quiver differs from the base quiver"));
            const PresentationReport pr =
                verify_presentation(T, presentation_s3n2_base(fs));
            if (!pr.ok) return std::make_pair(false, "not realized: " + pr.detail);
            return std::make_pair(true, pr.detail);
        }});
        checks.push_back(Check{"fixture n=2: trivial presentation", "", [fs]() {
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 2, fs);
            const Cocycle zero(A);
            const ExtensionAlgebra T0 = ExtensionAlgebra::create(A, zero);
            const PresentationReport pr =
                verify_presentation(T0, presentation_s3n2_trivial(fs));
            if (!pr.ok) return std::make_pair(false, "not realized: " + pr.detail);
            return std::make_pair(true, pr.detail);
        }});
        checks.push_back(Check{"fixture n=2: symmetry of the base extension", "",
                               [fs, seed, samples]() {
            if (!corollary46_predicate(3, 2))
                return std::make_pair(false,
                                      std::string("2n-1 divisibility predicate is false"));
            const Quiver qv = cyclic_quiver(3);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, 2, fs);
            const std::vector<Vec> basis = dual_hh2_basis(A, 3);
            const Cocycle alpha = theta(A, 3, basis.at(0));
            const ExtensionAlgebra T = ExtensionAlgebra::create(A, alpha);
            const SymmetryVerdict sv = symmetry_verdict(view_of(T), seed, samples);
            if (sv.kind != SymmetryVerdict::SYMMETRIC)
                return std::make_pair(false,
                                      "verdict is not SYMMETRIC (method " +
                                          sv.method + ")");
            return std::make_pair(true, "SYMMETRIC via " + sv.method);
        }});
    }

    // Trivial extensions are symmetric.
    if (dimT > 30) {
        checks.push_back(Check{"symmetry of the trivial extension",
                               "dim T = " + std::to_string(dimT) +
                                   " exceeds the form-search bound 30",
                               nullptr});
    } else {
        checks.push_back(Check{"symmetry of the trivial extension", "",
                               [s, n, fs, seed, samples]() {
            const Quiver qv = cyclic_quiver(s);
            const TruncatedAlgebra A = TruncatedAlgebra::create(qv, n, fs);
            const Cocycle zero(A);
            const ExtensionAlgebra T0 = ExtensionAlgebra::create(A, zero);
            const SymmetryVerdict sv = symmetry_verdict(view_of(T0), seed, samples);
            if (sv.kind != SymmetryVerdict::SYMMETRIC)
                return std::make_pair(false,
                                      "verdict is not SYMMETRIC (method " +
                                          sv.method + ")");
            return std::make_pair(true, "SYMMETRIC via " + sv.method);
        }});
    }

    // Top-degree extensions keep the base quiver and are symmetric.
    const std::size_t qtop = 2 * n - 1;
    if (qtop % s == 0) {
        const std::size_t m = dual_hh2_basis(A0, qtop).size();
        for (const Vec& pat : coefficient_patterns(m, fs)) {
            const std::string nm = "symmetry degree q=" + std::to_string(qtop) +
                                   " coeffs=" + vec_str(pat);
            if (dimT > 30) {
                checks.push_back(Check{nm,
                                       "dim T = " + std::to_string(dimT) +
                                           " exceeds the form-search bound 30",
                                       nullptr});
                continue;
            }
            checks.push_back(Check{nm, "", [s, n, qtop, fs, pat, seed, samples]() {
                const Quiver qv = cyclic_quiver(s);
                const TruncatedAlgebra A = TruncatedAlgebra::create(qv, n, fs);
                const std::vector<Vec> basis = dual_hh2_basis(A, qtop);
                Vec u = zero_vec(slice_basis(A, 2, qtop).size(), fs);
                for (std::size_t i = 0; i < basis.size(); ++i)
                    add_scaled(u, pat[i], basis[i]);
                const Cocycle alpha = theta(A, qtop, u);
                const ExtensionAlgebra T = ExtensionAlgebra::create(A, alpha);
                const SymmetryVerdict sv =
                    symmetry_verdict(view_of(T), seed, samples);
                if (sv.kind != SymmetryVerdict::SYMMETRIC)
                    return std::make_pair(false,
                                          "verdict is not SYMMETRIC (method " +
                                              sv.method + ")");
                return std::make_pair(true, "SYMMETRIC via " + sv.method);
            }});
        }
    }

    const std::vector<CheckRow> rows = run_checks(checks);

    std::size_t passed = 0, failed = 0, skipped = 0;
    std::ostringstream os;
    os << "verify: s=" << s << " n=" << n << " char=" << fs.characteristic
       << " seed=" << seed << " samples=" << samples << "\n";
    Json jrows = Json::array();
    for (const CheckRow& row : rows) {
        const char* tag = row.status == 'P' ? "PASS"
                          : row.status == 'S' ? "SKIP"
                                              : "FAIL";
        if (row.status == 'P') ++passed;
        else if (row.status == 'S') ++skipped;
        else ++failed;
        os << "[" << tag << "] " << row.name;
        if (!row.detail.empty()) os << ": " << row.detail;
        os << "\n";
        jrows.push_back(Json{{"name", row.name},
                             {"status", row.status == 'P'   ? "pass"
                                        : row.status == 'S' ? "skip"
                                                            : "fail"},
                             {"detail", row.detail}});
    }
    const bool ok = failed == 0;
    os << "result: " << (ok ? "PASS" : "FAIL") << " (" << passed << " passed, "
       << failed << " failed, " << skipped << " skipped)\n";

    CommandResult r;
    r.text = os.str();
    r.json = Json{{"schema", 1},
                  {"command", "verify"},
                  {"s", s},
                  {"n", n},
                  {"char", fs.characteristic},
                  {"seed", seed},
                  {"samples", samples},
                  {"checks", jrows},
                  {"passed", passed},
                  {"failed", failed},
                  {"skipped", skipped},
                  {"ok", ok}};
    r.exit_code = ok ? 0 : 1;
    return r;
}

}  // namespace hochex
