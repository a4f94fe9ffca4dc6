#include "weylpark/cli.hpp"

#include "weylpark/character_io.hpp"
#include "weylpark/degeneration.hpp"
#include "weylpark/fock.hpp"
#include "weylpark/parallel.hpp"
#include "weylpark/symfunc.hpp"
#include "weylpark/wedge.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace weylpark::cli {

using combinatorics::Partition;
using combinatorics::WeightVector;
using io::json;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + text + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw UsageError("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty() && !text.empty()) throw UsageError("not an integer list: '" + text + "'");
    return out;
}

Highest normalize_weight(const std::optional<std::string>& xi, const std::optional<std::string>& signature, int s,
                         int r) {
    if (r < 1) throw UsageError("--r must be positive");
    if (xi && signature) throw UsageError("give either --xi or --signature, not both");
    if (!xi && !signature) throw UsageError("one of --xi or --signature is required");
    std::vector<int> v = parse_int_list(xi ? *xi : *signature);
    if (static_cast<int>(v.size()) > r) throw UsageError("weight has more than r = " + std::to_string(r) + " entries");
    v.resize(r, 0);
    if (signature) {
        for (int& c : v) c += s;
    }
    for (int i = 0; i + 1 < r; ++i)
        if (v[i] < v[i + 1]) throw UsageError("weight must be weakly decreasing (dominant)");
    Highest h;
    h.xi = WeightVector(v);
    h.shift = v[r - 1];
    std::vector<int> lam(v);
    for (int& c : lam) c -= h.shift;
    h.lambda = Partition(lam);
    return h;
}

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("WEYLPARK_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

namespace {

struct Options {
    std::string format = "json";
    std::string output;
    int jobs = 0;
    std::uint64_t seed = 1;
};

json header(const std::string& command) { return {{"schema_version", io::kSchemaVersion}, {"command", command}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// CSV cell for an integer list, e.g. "2,0" (quoted), matching the character CSVs.
std::string csv_list(const std::vector<int>& v) {
    std::string s = "\"";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "\"";
}

// N for lambda; N for xi = lambda + s tau is this plus s.
int truncation(const Highest& h, std::optional<int> N) {
    if (!N) return std::max(h.lambda[0], 1);
    // N < xi_1 is fine (negative exponents); N - s must stay positive.
    if (*N - h.shift < 1) throw UsageError("--N must be at least s + 1 = xi_r + 1");
    return *N - h.shift;
}

// ---- dims ----

int cmd_dims(const Highest& h, int r, std::optional<int> N, const Options& opt, std::string& text) {
    const int n_lambda = truncation(h, N);
    const auto ctx = wedge::context_for(h.lambda, r, n_lambda);
    const std::size_t adm = wedge::admissible_sets(h.lambda, ctx).size();
    const std::size_t dim = wedge::cyclic_closure(h.lambda, r, n_lambda).dim();
    std::optional<mpz_class> cat;
    if (h.lambda.length() <= 1) cat = combinatorics::higher_catalan(r, h.lambda.size());
    const bool pass = adm == dim && (!cat || *cat == static_cast<unsigned long>(dim));

    if (opt.format == "json") {
        json j = header("dims");
        j["xi"] = h.xi.coords();
        j["r"] = r;
        j["N"] = n_lambda + h.shift;
        j["admissible_sets"] = adm;
        j["closure_dim"] = dim;
        j["catalan"] = cat ? io::integer_json(*cat) : json(nullptr);
        j["pass"] = pass;
        text = dump(j);
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "xi,r,N,admissible_sets,closure_dim,catalan,pass\n" << csv_list(h.xi.coords()) << ',' << r << ','
           << n_lambda + h.shift << ',' << adm << ',' << dim << ',' << (cat ? cat->get_str() : "") << ','
           << (pass ? "true" : "false") << '\n';
        text = os.str();
    } else {
        std::ostringstream os;
        os << "xi=" << h.xi.to_string() << " r=" << r << " N=" << n_lambda + h.shift << '\n';
        os << "admissible sets " << adm << ", closure dimension " << dim;
        if (cat) os << ", higher Catalan " << *cat;
        os << '\n' << adm << " = " << dim;
        if (cat) os << " = " << *cat;
        os << (pass ? "  ok" : "  MISMATCH") << '\n';
        text = os.str();
    }
    return pass ? kPass : kCheckFailed;
}

// ---- char ----

struct CheckResult {
    std::string name;
    bool pass = true;
    json detail;
};

CheckResult check_symmetry(const degeneration::BigradedCharacter& ch) {
    CheckResult c{"symmetry", ch.symmetric_in_x_y(), json::array()};
    const auto sp = ch.specialize();
    for (const auto& [xy, d] : sp) {
        auto it = sp.find({xy.second, xy.first});
        const long long other = it == sp.end() ? 0 : it->second;
        if (other != d) c.detail.push_back({{"x", xy.first}, {"y", xy.second}, {"dim", d}, {"swapped_dim", other}});
    }
    return c;
}

CheckResult check_degree(const degeneration::BigradedCharacter& ch, const Partition& lambda, int r) {
    const int formula = degeneration::degree_formula(lambda, r);
    return {"degree", ch.max_x_degree() == formula, {{"max_x_degree", ch.max_x_degree()}, {"formula", formula}}};
}

CheckResult check_frobenius(const degeneration::BigradedCharacter& ch, const Highest& h, int r) {
    CheckResult c{"frobenius", true, json::array()};
    const auto fr = symfunc::frobenius_character(h.lambda, r);
    symfunc::KostkaTable table;
    const int top = std::max(ch.max_x_degree(), fr.x_degree());
    for (const auto& eta : combinatorics::compositions(h.lambda.size(), r)) {
        const XPoly mult = symfunc::weight_multiplicity(fr, eta, table);
        const WeightVector shifted = eta + h.shift * WeightVector::tau(r);
        for (int x = 0; x <= top; ++x) {
            const mpz_class want = mult.coefficient(x);
            const long long got = ch.x_graded(shifted, x);
            if (want != static_cast<long>(got)) {
                c.pass = false;
                c.detail.push_back({{"weight", shifted.coords()}, {"x", x}, {"filtration", got},
                                    {"schur", io::integer_json(want)}});
            }
        }
    }
    return c;
}

CheckResult check_nindep(const degeneration::BigradedCharacter& ch, const Highest& h, int r, int n_lambda) {
    const auto next = degeneration::bigraded_character(h.lambda, r, n_lambda + 1).shifted(h.shift * WeightVector::tau(r));
    CheckResult c{"nindep", next == ch, json::array()};
    if (!c.pass) {
        std::map<degeneration::BigradedKey, std::pair<long long, long long>> diff;
        for (const auto& [k, d] : ch.entries()) diff[k].first = d;
        for (const auto& [k, d] : next.entries()) diff[k].second = d;
        for (const auto& [k, p] : diff)
            if (p.first != p.second)
                c.detail.push_back({{"weight", std::get<0>(k).coords()}, {"x", std::get<1>(k)}, {"y", std::get<2>(k)},
                                    {"N", p.first}, {"N+1", p.second}});
    }
    return c;
}

int cmd_char(const Highest& h, int r, std::optional<int> N, const std::vector<std::string>& checks, const Options& opt,
             std::string& text, std::ostream& err) {
    const int n_lambda = truncation(h, N);
    const auto filt = degeneration::filtration_levels(h.lambda, r, n_lambda);
    const auto ch = filt.character.shifted(h.shift * WeightVector::tau(r));

    std::vector<CheckResult> results(checks.size());
    parallel_for(checks.size(), resolve_jobs(opt.jobs), [&](std::size_t i) {
        const auto& name = checks[i];
        if (name == "symmetry") results[i] = check_symmetry(ch);
        else if (name == "degree") results[i] = check_degree(ch, h.lambda, r);
        else if (name == "frobenius") results[i] = check_frobenius(ch, h, r);
        else results[i] = check_nindep(ch, h, r, n_lambda);
    });
    bool pass = true;
    for (const auto& c : results) pass = pass && c.pass;

    if (opt.format == "json") {
        json j = header("char");
        j["xi"] = h.xi.coords();
        j["r"] = r;
        j["N"] = n_lambda + h.shift;
        j["dim"] = ch.total();
        j["filtration_dims"] = filt.level_dims();
        j["character"] = io::character_json(ch);
        json cj = json::array();
        for (const auto& c : results) cj.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = cj;
        j["pass"] = pass;
        text = dump(j);
    } else if (opt.format == "csv") {
        text = io::character_csv(ch);
    } else {
        std::ostringstream os;
        os << "xi=" << h.xi.to_string() << " r=" << r << " N=" << n_lambda + h.shift << "  dim " << ch.total() << '\n';
        os << io::character_pretty(ch);
        for (const auto& c : results) os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << ' ' << c.detail.dump() << '\n';
        text = os.str();
    }
    for (const auto& c : results)
        if (!c.pass) err << "check " << c.name << " failed: " << c.detail.dump() << '\n';
    return pass ? kPass : kCheckFailed;
}

// ---- parking ----

int cmd_parking(int n, const std::optional<std::string>& rho_text, const std::optional<std::string>& xi_text,
                bool histogram, const Options& opt, std::string& text) {
    if (n < 0) throw UsageError("--n must be non-negative");
    if (rho_text && xi_text) throw UsageError("give either --rho or --xi, not both");
    Partition rho;
    bool classical = false;
    try {
        if (rho_text) {
            rho = Partition(parse_int_list(*rho_text));
        } else if (xi_text) {
            const Partition xi(parse_int_list(*xi_text));
            if (xi.size() != n) throw UsageError("|xi| must equal n");
            rho = combinatorics::rho_of_xi(xi);
        } else {
            std::vector<int> parts;
            for (int i = n; i >= 1; --i) parts.push_back(i);
            rho = Partition(parts);
            classical = true;
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto pf = combinatorics::enumerate_parking(n, rho);
    const auto seqs = combinatorics::enumerate_A(n, rho);
    mpz_class orbit_sum = 0;
    json orbits = json::array();
    for (const auto& a : seqs) {
        const mpz_class size = combinatorics::multinomial(a);
        orbit_sum += size;
        orbits.push_back({{"a", a}, {"size", io::integer_json(size)}});
    }
    std::map<int, long long> hist;
    for (const auto& f : pf) ++hist[combinatorics::parking_statistic(f)];
    bool pass = orbit_sum == static_cast<unsigned long>(pf.size());
    mpz_class expected;
    if (classical) {
        mpz_ui_pow_ui(expected.get_mpz_t(), n + 1, n > 0 ? n - 1 : 0);
        if (n == 0) expected = 1;
        pass = pass && expected == static_cast<unsigned long>(pf.size());
    }

    if (opt.format == "json") {
        json j = header("parking");
        j["n"] = n;
        j["rho"] = rho.parts();
        j["count"] = pf.size();
        j["orbit_sum"] = io::integer_json(orbit_sum);
        if (classical) j["classical_count"] = io::integer_json(expected);
        j["orbits"] = orbits;
        if (histogram) {
            json hj = json::object();
            for (const auto& [k, v] : hist) hj[std::to_string(k)] = v;
            j["histogram"] = hj;
        }
        j["pass"] = pass;
        text = dump(j);
    } else if (opt.format == "csv") {
        std::ostringstream os;
        if (histogram) {
            os << "statistic,count\n";
            for (const auto& [k, v] : hist) os << k << ',' << v << '\n';
        } else {
            os << "n,rho,count,orbit_sum,pass\n" << n << ',' << csv_list(rho.parts()) << ',' << pf.size() << ','
               << orbit_sum << ',' << (pass ? "true" : "false") << '\n';
        }
        text = os.str();
    } else {
        std::ostringstream os;
        os << "n=" << n << " rho=" << rho.to_string() << ": " << pf.size() << " parking functions";
        os << " (orbit sum " << orbit_sum;
        if (classical) os << ", (n+1)^(n-1) = " << expected;
        os << ")" << (pass ? "" : "  MISMATCH") << '\n';
        for (const auto& o : orbits) os << "  orbit " << o["a"].dump() << " size " << o["size"].dump() << '\n';
        if (histogram) {
            os << "statistic histogram:";
            for (const auto& [k, v] : hist) os << ' ' << k << ':' << v;
            os << '\n';
        }
        text = os.str();
    }
    return pass ? kPass : kCheckFailed;
}

// ---- coinvariant-bound ----

int cmd_coinvariant_bound(int r, const Options& opt, std::string& text) {
    if (r < 1) throw UsageError("--r must be positive");
    const Partition xi{r};
    const auto ctx = wedge::context_for(xi, r, r);
    const WeightVector tau = WeightVector::tau(r);
    long long hsets = 0;
    for (const auto& h : wedge::admissible_sets(xi, ctx))
        if (h.weight(ctx) == tau) ++hsets;
    const mpz_class schur = symfunc::weight_multiplicity(symfunc::frobenius_character(xi, r), tau).at_one();
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), r + 1, r - 1);
    const bool pass = expected == static_cast<long>(hsets) && schur == expected;
    if (opt.format == "json") {
        json j = header("coinvariant-bound");
        j["r"] = r;
        j["hset_count"] = hsets;
        j["schur_count"] = io::integer_json(schur);
        j["parking_count"] = io::integer_json(expected);
        j["pass"] = pass;
        text = dump(j);
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "r,hset_count,schur_count,parking_count,pass\n"
           << r << ',' << hsets << ',' << schur << ',' << expected << ',' << (pass ? "true" : "false") << '\n';
        text = os.str();
    } else {
        std::ostringstream os;
        os << "dim V(" << r << "eps_1)^tau: H-sets " << hsets << ", Schur/Kostka " << schur << ", (r+1)^(r-1) = "
           << expected << (pass ? "  ok" : "  MISMATCH") << '\n';
        text = os.str();
    }
    return pass ? kPass : kCheckFailed;
}

// ---- fock-verify ----

struct Sweep {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    json examples = json::array();  // first few failures
    void fail(json what) {
        ++failures;
        if (examples.size() < 5) examples.push_back(std::move(what));
    }
};

std::string describe(const fock::DiffOp& op) { return op.to_string(); }

int cmd_fock_verify(int r, int depth, const Options& opt, std::string& text, std::ostream& err) {
    if (r < 1) throw UsageError("--r must be positive");
    if (depth < 0) throw UsageError("--D must be non-negative");
    const int jobs = resolve_jobs(opt.jobs);

    std::vector<fock::FockMonomial> samples;
    for (int n = 0; n <= 1; ++n)
        for (auto& f : fock::sector_monomials(n, r, std::min(depth, 2))) samples.push_back(f);

    // Closed-form cocycle on pairs of elementary matrices.
    std::vector<std::tuple<int, int, int, int, int, int, int, int>> pairs;  // p q i a  s t j b
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
            for (int i = -3; i <= 3; ++i)
                for (int j = -3; j <= 3; ++j)
                    for (int p = 1; p <= r; ++p)
                        for (int q = 1; q <= r; ++q)
                            for (int s = 1; s <= r; ++s)
                                for (int t = 1; t <= r; ++t)
                                    if (q == s && p == t) pairs.emplace_back(p, q, i, a, s, t, j, b);  // Tr = 1
                                    else if (p == q && s == t && p != s) pairs.emplace_back(p, q, i, a, s, t, j, b);  // Tr = 0
    std::vector<fock::CocycleCheck> results(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t k) {
        const auto [p, q, i, a, s, t, j, b] = pairs[k];
        results[k] = fock::verify_cocycle(fock::DiffOp::unit(r, p, q, i, a), fock::DiffOp::unit(r, s, t, j, b), samples);
    });
    Sweep cocycle{"cocycle"};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        ++cocycle.cases;
        if (!results[k].ok()) {
            const auto [p, q, i, a, s, t, j, b] = pairs[k];
            cocycle.fail({{"A", describe(fock::DiffOp::unit(r, p, q, i, a))},
                          {"B", describe(fock::DiffOp::unit(r, s, t, j, b))},
                          {"scalar", results[k].scalar},
                          {"measured", results[k].value.get_str()},
                          {"expected", results[k].expected.get_str()}});
        }
    }

    // K normalization and the central element acting by 1.
    Sweep knorm{"k_normalization"};
    if (r >= 2)
        for (int m = -4; m <= 4; ++m) {
            ++knorm.cases;
            const auto c = fock::verify_cocycle(fock::DiffOp::unit(r, 1, 2, m, 0), fock::DiffOp::unit(r, 2, 1, -m, 0), samples);
            if (!c.scalar || !c.consistent || c.value != m) knorm.fail({{"m", m}, {"measured", c.value.get_str()}});
        }
    for (const auto& f : samples) {
        ++knorm.cases;
        const auto v = fock::FockVector::monomial(f);
        if (!(fock::act_fock(fock::DiffOp::central(r, 1), v) == v)) knorm.fail({{"sample", f.to_string(r)}});
    }

    // Randomized bilinear combinations.
    Sweep random_pairs{"cocycle_random"};
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-3, 3), col(1, r), expo(-3, 3), dpow(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        fock::DiffOp A(r), B(r);
        for (int t = 0; t < 3; ++t) {
            mpq_class c(coef(rng), 1 + (trial % 2));
            c.canonicalize();
            A += fock::DiffOp::unit(r, col(rng), col(rng), expo(rng), dpow(rng), c);
            B += fock::DiffOp::unit(r, col(rng), col(rng), expo(rng), dpow(rng), mpq_class(coef(rng)));
        }
        ++random_pairs.cases;
        const auto c = fock::verify_cocycle(A, B, samples);
        if (!c.ok())
            random_pairs.fail({{"A", describe(A)}, {"B", describe(B)}, {"measured", c.value.get_str()},
                               {"expected", c.expected.get_str()}});
    }

    // Annihilation identity.
    Sweep lemma{"lemma_annihilation"};
    std::vector<std::tuple<int, int, int>> lemma_cases;  // n, j, m
    for (int n = 0; n <= 3; ++n)
        for (int j = 1; j <= r; ++j)
            for (int m = -2; m <= 2; ++m) lemma_cases.emplace_back(n, j, m);
    std::vector<std::vector<fock::FockMonomial>> sectors(4);
    for (int n = 0; n <= 3; ++n) sectors[n] = fock::sector_monomials(n, r, depth);
    std::vector<int> lemma_fail(lemma_cases.size(), 0);
    std::vector<std::string> lemma_example(lemma_cases.size());
    parallel_for(lemma_cases.size(), jobs, [&](std::size_t k) {
        const auto [n, j, m] = lemma_cases[k];
        for (const auto& f : sectors[n]) {
            const auto out = fock::lemma_operator(r, j, m, fock::FockVector::monomial(f));
            if (!out.is_zero()) {
                if (lemma_fail[k]++ == 0) lemma_example[k] = f.to_string(r);
            }
        }
    });
    for (std::size_t k = 0; k < lemma_cases.size(); ++k) {
        const auto [n, j, m] = lemma_cases[k];
        lemma.cases += sectors[n].size();
        for (int t = 0; t < lemma_fail[k]; ++t)
            lemma.fail({{"charge", n}, {"j", j}, {"m", m}, {"sample", lemma_example[k]}});
    }

    std::vector<Sweep> sweeps{cocycle, knorm, random_pairs, lemma};
    bool pass = true;
    for (const auto& s : sweeps) pass = pass && s.failures == 0;

    if (opt.format == "json") {
        json j = header("fock-verify");
        j["r"] = r;
        j["depth"] = depth;
        j["seed"] = opt.seed;
        json arr = json::array();
        for (const auto& s : sweeps)
            arr.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"pass", s.failures == 0},
                           {"examples", s.examples}});
        j["checks"] = arr;
        j["pass"] = pass;
        text = dump(j);
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "name,cases,failures,pass\n";
        for (const auto& s : sweeps) os << s.name << ',' << s.cases << ',' << s.failures << ',' << (s.failures ? "false" : "true") << '\n';
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& s : sweeps)
            os << s.name << ": " << s.cases << " cases, " << s.failures << " failures" << (s.failures ? "  FAIL" : "  ok") << '\n';
        text = os.str();
    }
    for (const auto& s : sweeps)
        if (s.failures) err << s.name << " failed: " << s.examples.dump() << '\n';
    return pass ? kPass : kCheckFailed;
}

// ---- limit-check ----

int cmd_limit_check(int n, int r, int nmax, int D, const Options& opt, std::string& text, std::ostream& err) {
    if (r < 1) throw UsageError("--r must be positive");
    if (nmax < 1) throw UsageError("--Nmax must be at least 1");
    if (D < 0) throw UsageError("--D must be non-negative");
    const auto rhs = fock::limit_character_rhs(n, r, D);

    struct Side {
        bool defined = false;
        int top = -1;
        fock::Series series;
    };
    std::vector<Side> lhs(nmax + 1);
    parallel_for(static_cast<std::size_t>(nmax), resolve_jobs(opt.jobs), [&](std::size_t k) {
        const int N = static_cast<int>(k) + 1;
        if (n + N * r < 0) return;
        lhs[N].defined = true;
        lhs[N].series = fock::limit_character_lhs(n, r, N, D, &lhs[N].top);
    });

    bool pass = true;
    json table = json::array();
    std::ostringstream pretty;
    for (int i = 0; i <= D; ++i) {
        const auto want = fock::x_slice(rhs, i);
        json agree = json::array();
        std::vector<int> state(nmax + 1, -1);  // -1 not comparable, 0 differs, 1 agrees
        for (int N = 1; N <= nmax; ++N) {
            if (lhs[N].defined && i <= lhs[N].top) state[N] = fock::x_slice(lhs[N].series, i) == want ? 1 : 0;
            agree.push_back(state[N] < 0 ? json(nullptr) : json(state[N] == 1));
        }
        int stable_from = 0;
        for (int N = nmax; N >= 1 && state[N] == 1; --N) stable_from = N;
        const bool ok = stable_from > 0;
        pass = pass && ok;
        table.push_back({{"x", i}, {"agree", agree}, {"stable_from", ok ? json(stable_from) : json(nullptr)}});
        pretty << "x^" << i << ": ";
        for (int N = 1; N <= nmax; ++N) pretty << (state[N] < 0 ? '.' : state[N] ? '=' : 'x');
        pretty << (ok ? "  stable from N=" + std::to_string(stable_from) : std::string("  DIVERGES")) << '\n';
        if (!ok) {
            err << "coefficient x^" << i << " does not match the closed form at N=" << nmax << '\n';
            err << "  closed form:\n" << io::series_pretty(want);
            if (lhs[nmax].defined) err << "  module (N=" << nmax << "):\n" << io::series_pretty(fock::x_slice(lhs[nmax].series, i));
        }
    }

    if (opt.format == "json") {
        json j = header("limit-check");
        j["n"] = n;
        j["r"] = r;
        j["Nmax"] = nmax;
        j["D"] = D;
        j["rhs"] = io::series_json(rhs);
        json l = json::array();
        for (int N = 1; N <= nmax; ++N)
            l.push_back({{"N", N}, {"max_x_degree", lhs[N].defined ? json(lhs[N].top) : json(nullptr)},
                         {"series", lhs[N].defined ? io::series_json(lhs[N].series) : json(nullptr)}});
        j["lhs"] = l;
        j["agreement"] = table;
        j["pass"] = pass;
        text = dump(j);
    } else if (opt.format == "csv") {
        text = io::series_csv(rhs);
    } else {
        std::ostringstream os;
        os << "closed form, n=" << n << " r=" << r << " up to x^" << D << ":\n" << io::series_pretty(rhs);
        for (int N = 1; N <= nmax; ++N)
            if (lhs[N].defined) os << "module N=" << N << " (top x-degree " << lhs[N].top << "):\n" << io::series_pretty(lhs[N].series);
        os << "agreement per N (= agrees, x differs, . out of range):\n" << pretty.str();
        text = os.str();
    }
    return pass ? kPass : kCheckFailed;
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.output);
    if (!f) throw UsageError("cannot open output file '" + opt.output + "'");
    f << text;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deformed local Weyl modules, parking functions and semi-infinite wedge checks", "weylpark"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--output", opt.output, "Write the report to this file");
    app.add_option("--jobs", opt.jobs, "Worker threads (default: $WEYLPARK_JOBS or 1)");
    app.add_option("--seed", opt.seed, "Seed for randomized sweeps");

    std::optional<std::string> xi, signature, rho;
    int s = 0, r = 0, n = 0, nmax = 3, depth = -1;
    std::optional<int> N;
    bool histogram = false;
    std::vector<std::string> checks;

    auto add_weight = [&](CLI::App* sub) {
        sub->add_option("--xi", xi, "Highest weight as comma-separated parts");
        sub->add_option("--signature", signature, "Signature lambda (used with --s)");
        sub->add_option("--s", s, "Multiple of tau added to the signature");
        sub->add_option("--r", r, "Rank r of gl_r")->required();
        sub->add_option("--N", N, "Truncation level (default xi_1)");
    };

    auto* dims = app.add_subcommand("dims", "Admissible sets vs closure dimension vs higher Catalan number");
    add_weight(dims);
    auto* chr = app.add_subcommand("char", "Bigraded character of V(xi)");
    add_weight(chr);
    chr->add_option("--check", checks, "symmetry | degree | frobenius | nindep (repeatable)")
        ->check(CLI::IsMember({"symmetry", "degree", "frobenius", "nindep"}));
    auto* park = app.add_subcommand("parking", "Enumerate rho-parking functions");
    park->add_option("--n", n, "Number of cars")->required();
    park->add_option("--rho", rho, "Partition rho (default (n,...,1))");
    park->add_option("--xi", xi, "Take rho = rho(xi)");
    park->add_flag("--histogram", histogram, "Report the statistic histogram");
    auto* coinv = app.add_subcommand("coinvariant-bound", "dim V(r eps_1)^tau vs (r+1)^(r-1)");
    coinv->add_option("--r", r, "Rank r")->required();
    auto* fockv = app.add_subcommand("fock-verify", "Cocycle and annihilation-identity sweeps on the Fock space");
    fockv->add_option("--r", r, "Rank r")->default_val(2);
    fockv->add_option("--D", depth, "Truncation depth")->default_val(4);
    auto* limit = app.add_subcommand("limit-check", "Limit-of-characters comparison");
    limit->add_option("--n", n, "Charge n")->required();
    limit->add_option("--r", r, "Rank r")->default_val(2);
    limit->add_option("--Nmax", nmax, "Largest N")->default_val(3);
    limit->add_option("--D", depth, "x-degree truncation")->default_val(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsageError;
    }

    try {
        std::string text;
        int code = kPass;
        if (*dims) {
            code = cmd_dims(normalize_weight(xi, signature, s, r), r, N, opt, text);
        } else if (*chr) {
            code = cmd_char(normalize_weight(xi, signature, s, r), r, N, checks, opt, text, err);
        } else if (*park) {
            code = cmd_parking(n, rho, xi, histogram, opt, text);
        } else if (*coinv) {
            code = cmd_coinvariant_bound(r, opt, text);
        } else if (*fockv) {
            code = cmd_fock_verify(r, depth, opt, text, err);
        } else if (*limit) {
            code = cmd_limit_check(n, r, nmax, depth, opt, text, err);
        }
        emit(text, opt, out);
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("weylpark");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage) argv.push_back(a.data());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace weylpark::cli
