#include "vbf/cli.hpp"

#include "vbf/bfun.hpp"
#include "vbf/coxeter.hpp"
#include "vbf/expr.hpp"
#include "vbf/partitions.hpp"
#include "vbf/symfun.hpp"
#include "vbf/weyl.hpp"

#include "json.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace vbf {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kUsage = R"(usage: vbfun [--json] [--cache PATH | --no-cache] <verb> [args]

verbs:
  conj <n>               conjectured b-function of the n-variable Vandermonde
  local <q1> <q2> ...    local b-function at a point with rational coordinates
  blowup <n>             b-function of the pullback under the diagonal blow-up
  upper <n>              upper-bound polynomial for the conjectured b-function
  opdam <type>           quotient-discriminant b-function for a Coxeter type
                         (labels like A3, B4, D5, E6, F4, G2, H3, I2(7))
  check <n_max>          run the invariant suite for n = 2..n_max
  verify-lemmas <n>      verify the symmetric-function identities at n
  jump <n>               minimal jumping coefficient of the braid arrangement
  oracle <poly> [--order D] [--sdeg K] [--cdeg C] [--full-ansatz]
                         search for a Bernstein identity of the polynomial;
                         bounds default to (deg f, deg f + 1, deg f)

flags:
  --json                 machine-readable output
  --cache PATH           b-function cache file (default ./.vbfun_cache.json)
  --no-cache             do not read or write any cache file
exit status: 0 success, 1 a requested check failed, 2 usage error
)";

struct Options {
    bool json = false;
    bool use_cache = true;
    std::filesystem::path cache_path = ".vbfun_cache.json";
    std::optional<int> order, sdeg, cdeg;
    bool full_ansatz = false;
    std::string verb;
    std::vector<std::string> positionals;
};

int parse_int(const std::string& text, const std::string& what, int min_value) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw UsageError("expected an integer for " + what + ", got '" + text + "'");
    }
    if (used != text.size()) throw UsageError("expected an integer for " + what + ", got '" + text + "'");
    if (value < min_value)
        throw UsageError(what + " must be at least " + std::to_string(min_value));
    return value;
}

Options parse_args(const std::vector<std::string>& args) {
    Options opt;
    std::size_t i = 0;
    const auto next_value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) throw UsageError("flag " + flag + " needs a value");
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            opt.json = true;
        } else if (a == "--cache") {
            opt.cache_path = next_value(a);
            opt.use_cache = true;
        } else if (a.rfind("--cache=", 0) == 0) {
            opt.cache_path = a.substr(8);
            opt.use_cache = true;
        } else if (a == "--no-cache") {
            opt.use_cache = false;
        } else if (a == "--order") {
            opt.order = parse_int(next_value(a), "--order", 1);
        } else if (a == "--sdeg") {
            opt.sdeg = parse_int(next_value(a), "--sdeg", 0);
        } else if (a == "--cdeg") {
            opt.cdeg = parse_int(next_value(a), "--cdeg", 0);
        } else if (a == "--full-ansatz") {
            opt.full_ansatz = true;
        } else if (a == "--help" || a == "-h") {
            throw UsageError("help");
        } else if (a.rfind("--", 0) == 0) {
            throw UsageError("unknown flag '" + a + "'");
        } else if (opt.verb.empty()) {
            opt.verb = a;
        } else {
            opt.positionals.push_back(a);
        }
    }
    if (opt.verb.empty()) throw UsageError("no verb given");
    return opt;
}

void require_arity(const Options& opt, std::size_t count) {
    if (opt.positionals.size() != count)
        throw UsageError("verb '" + opt.verb + "' expects " + std::to_string(count) +
                         " argument(s), got " + std::to_string(opt.positionals.size()));
}

void print_poly(const FactoredBPoly& b, const Options& opt, std::ostream& out) {
    if (opt.json)
        out << b.to_json().dump() << '\n';
    else
        out << b.str() << '\n';
}

Rational parse_coordinate(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

// Verbs that consult the engine share the persistent cache.
class CachedEngine {
public:
    CachedEngine(const Options& opt, std::ostream& err) : opt_(opt), err_(err) {
        if (!opt_.use_cache || !std::filesystem::exists(opt_.cache_path)) return;
        const BxiCache cache = BxiCache::load(opt_.cache_path);
        seeded_ = cache.entries.size();
        engine_.seed(cache.entries);
    }

    BFunctionEngine& engine() { return engine_; }

    ~CachedEngine() {
        if (!opt_.use_cache) return;
        try {
            BxiCache cache;
            cache.entries = engine_.snapshot();
            if (cache.entries.size() > seeded_) cache.save(opt_.cache_path);
        } catch (const std::exception& e) {
            err_ << "warning: could not write cache: " << e.what() << '\n';
        }
    }

private:
    const Options& opt_;
    std::ostream& err_;
    BFunctionEngine engine_;
    std::size_t seeded_ = 0;
};

int cmd_conj(const Options& opt, std::ostream& out, std::ostream& err) {
    require_arity(opt, 1);
    const int n = parse_int(opt.positionals[0], "n", 0);
    CachedEngine cached(opt, err);
    print_poly(cached.engine().conjectured(n), opt, out);
    return 0;
}

int cmd_local(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.positionals.empty()) throw UsageError("verb 'local' needs at least one coordinate");
    std::vector<Rational> q;
    for (const std::string& coord : opt.positionals) q.push_back(parse_coordinate(coord));
    CachedEngine cached(opt, err);
    print_poly(cached.engine().local_b(q), opt, out);
    return 0;
}

int cmd_blowup(const Options& opt, std::ostream& out, std::ostream& err) {
    require_arity(opt, 1);
    const int n = parse_int(opt.positionals[0], "n", 2);
    CachedEngine cached(opt, err);
    print_poly(cached.engine().blowup_b(n), opt, out);
    return 0;
}

int cmd_upper(const Options& opt, std::ostream& out, std::ostream& err) {
    require_arity(opt, 1);
    const int n = parse_int(opt.positionals[0], "n", 2);
    CachedEngine cached(opt, err);
    print_poly(cached.engine().upper_bound_b(n), opt, out);
    return 0;
}

int cmd_opdam(const Options& opt, std::ostream& out, std::ostream&) {
    require_arity(opt, 1);
    CoxeterDatum datum;
    try {
        datum = coxeter_datum(opt.positionals[0]);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const FactoredBPoly b = opdam_b(datum);
    if (opt.json) {
        nlohmann::json j;
        j["label"] = datum.label;
        j["rank"] = datum.rank;
        j["degrees"] = datum.degrees;
        j["positive_roots"] = datum.positive_root_count;
        j["crystallographic"] = datum.crystallographic;
        j["b"] = b.to_json();
        out << j.dump() << '\n';
    } else {
        out << b.str() << '\n';
        if (!datum.crystallographic)
            out << "note: divisibility coverage is conjectural for non-crystallographic type "
                << datum.label << '\n';
    }
    return 0;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
    require_arity(opt, 1);
    const int n_max = parse_int(opt.positionals[0], "n_max", 2);
    CachedEngine cached(opt, err);
    const std::vector<BFunctionReport> reports = cached.engine().run_invariant_suite(n_max);
    bool all_ok = true;
    if (opt.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            all_ok = all_ok && r.all_ok();
        }
        out << arr.dump() << '\n';
    } else {
        for (const auto& r : reports) {
            out << "n=" << r.n << ": min_jump=" << r.min_jump.str();
            for (const auto& [name, ok] : r.checks) {
                out << ' ' << name << '=' << (ok ? "ok" : "FAIL");
                all_ok = all_ok && ok;
            }
            out << '\n';
        }
        out << (all_ok ? "all checks passed" : "some checks FAILED") << " for n = 2.."
            << n_max << '\n';
    }
    return all_ok ? 0 : 1;
}

int cmd_verify_lemmas(const Options& opt, std::ostream& out, std::ostream&) {
    require_arity(opt, 1);
    const int n = parse_int(opt.positionals[0], "n", 2);
    const bool gradients = verify_gradient_cofactors(n);
    const bool triangular = verify_triangular_form(n);
    const bool pivot = verify_last_pivot_residue(n);
    std::map<int, bool> residues;
    for (int k = 3; k <= n; ++k) residues[k] = cofactor_residue(k, n).matches;
    const CofactorResidue k2 = cofactor_residue(2, n);

    bool all_ok = gradients && triangular && pivot;
    for (const auto& [k, ok] : residues) all_ok = all_ok && ok;

    if (opt.json) {
        nlohmann::json j;
        j["n"] = n;
        j["gradient_cofactors"] = gradients;
        j["triangular_form"] = triangular;
        j["pivot_residue"] = pivot;
        nlohmann::json res = nlohmann::json::object();
        for (const auto& [k, ok] : residues) res[std::to_string(k)] = ok;
        j["cofactor_residues"] = res;
        j["cofactor_k2"] = {{"matches", k2.matches},
                            {"actual", k2.actual.str()},
                            {"expected", k2.expected.str()}};
        out << j.dump() << '\n';
    } else {
        const auto line = [&](const std::string& name, bool ok) {
            out << name << std::string(name.size() < 28 ? 28 - name.size() : 1, ' ')
                << (ok ? "pass" : "FAIL") << '\n';
        };
        line("gradient cofactors", gradients);
        line("triangular form", triangular);
        line("pivot residue", pivot);
        for (const auto& [k, ok] : residues) line("cofactor residue k=" + std::to_string(k), ok);
        out << "cofactor residue k=2          diagnostic: residue " << k2.actual.str()
            << (k2.matches ? " matches " : " differs from ") << "formula " << k2.expected.str()
            << '\n';
    }
    return all_ok ? 0 : 1;
}

int cmd_jump(const Options& opt, std::ostream& out, std::ostream&) {
    require_arity(opt, 1);
    const int n = parse_int(opt.positionals[0], "n", 2);
    if (n > 12) throw UsageError("jump supports n up to 12 (Bell growth)");
    const Rational alpha = min_jumping_coefficient(n);
    if (opt.json)
        out << nlohmann::json{{"num", alpha.num_long()}, {"den", alpha.den_long()}}.dump() << '\n';
    else
        out << alpha.str() << '\n';
    return 0;
}

int cmd_oracle(const Options& opt, std::ostream& out, std::ostream&) {
    require_arity(opt, 1);
    MultiPoly f = [&] {
        try {
            return parse_polynomial(opt.positionals[0]);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (f.is_zero() || f.is_constant()) throw UsageError("oracle needs a nonconstant polynomial");
    const int deg = f.total_degree();
    OracleBounds bounds;
    bounds.order = opt.order.value_or(deg);
    bounds.s_degree = opt.sdeg.value_or(deg + 1);
    bounds.coeff_degree = opt.cdeg.value_or(deg);
    const auto result = find_bernstein(f, bounds, !opt.full_ansatz);

    if (opt.json) {
        nlohmann::json j;
        j["found"] = result.has_value();
        j["bounds"] = {{"order", bounds.order},
                       {"sdeg", bounds.s_degree},
                       {"cdeg", bounds.coeff_degree}};
        if (result) {
            j["b"] = result->b_factored.to_json();
            j["fully_factored"] = result->fully_factored;
            nlohmann::json coeffs = nlohmann::json::array();
            for (const Rational& c : result->b_coeffs) coeffs.push_back(c.str());
            j["b_coeffs"] = coeffs;
            j["certificate"] = result->certificate.str();
        }
        out << j.dump() << '\n';
        return 0;
    }
    if (!result) {
        out << "no Bernstein identity within bounds (inconclusive)\n";
        return 0;
    }
    if (result->fully_factored) {
        out << "b(s) = " << result->b_factored.str() << '\n';
    } else {
        out << "b(s) rational-root part: " << result->b_factored.str() << '\n';
        out << "unfactored cofactor coefficients (low degree first):";
        for (const Rational& c : result->b_coeffs) out << ' ' << c.str();
        out << '\n';
    }
    out << "certificate: " << result->certificate.str() << '\n';
    out << "bounds: order=" << bounds.order << " sdeg=" << bounds.s_degree
        << " cdeg=" << bounds.coeff_degree << '\n';
    return 0;
}

}  // namespace

BxiCache BxiCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read cache file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("cache file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("version") || !j["version"].is_number_integer())
        throw std::runtime_error("cache file has no version tag: " + path.string());
    if (j["version"].get<int>() != kVersion)
        throw std::runtime_error("unsupported cache version " + j["version"].dump() +
                                 " (expected " + std::to_string(kVersion) + ")");
    BxiCache cache;
    if (j.contains("entries")) {
        if (!j["entries"].is_object()) throw std::runtime_error("cache entries must be an object");
        for (const auto& [key, value] : j["entries"].items()) {
            int n = 0;
            try {
                std::size_t used = 0;
                n = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw std::runtime_error("cache entry key is not an integer: '" + key + "'");
            }
            if (n < 2) throw std::runtime_error("cache entry key out of range: " + key);
            cache.entries.emplace(n, FactoredBPoly::from_json(value));
        }
    }
    return cache;
}

void BxiCache::save(const std::filesystem::path& path) const {
    nlohmann::json j;
    j["version"] = kVersion;
    nlohmann::json entries_json = nlohmann::json::object();
    for (const auto& [n, b] : entries) entries_json[std::to_string(n)] = b.to_json();
    j["entries"] = entries_json;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path.string());
    out << j.dump(1) << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    try {
        opt = parse_args(args);
    } catch (const UsageError& e) {
        if (std::string(e.what()) == "help") {
            out << kUsage;
            return 0;
        }
        err << "error: " << e.what() << '\n' << kUsage;
        return 2;
    }

    // buffer output so usage errors never leave partial output behind
    std::ostringstream buffer;
    int code = 0;
    try {
        if (opt.verb == "conj")
            code = cmd_conj(opt, buffer, err);
        else if (opt.verb == "local")
            code = cmd_local(opt, buffer, err);
        else if (opt.verb == "blowup")
            code = cmd_blowup(opt, buffer, err);
        else if (opt.verb == "upper")
            code = cmd_upper(opt, buffer, err);
        else if (opt.verb == "opdam")
            code = cmd_opdam(opt, buffer, err);
        else if (opt.verb == "check")
            code = cmd_check(opt, buffer, err);
        else if (opt.verb == "verify-lemmas")
            code = cmd_verify_lemmas(opt, buffer, err);
        else if (opt.verb == "jump")
            code = cmd_jump(opt, buffer, err);
        else if (opt.verb == "oracle")
            code = cmd_oracle(opt, buffer, err);
        else
            throw UsageError("unknown verb '" + opt.verb + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    out << buffer.str();
    return code;
}

}  // namespace vbf
