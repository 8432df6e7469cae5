// surfhom: exact counts of homomorphisms from surface groups to finite
// groups, with character tables, a word-equation engine, brute-force
// comparison, and identity verification suites.
//
// Exit codes: 0 ok, 1 usage or input error, 2 enumeration budget exceeded,
// 3 internal assertion (formula/oracle mismatch or failed validation).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surfhom/character_table.hpp"
#include "surfhom/class_function.hpp"
#include "surfhom/group.hpp"
#include "surfhom/oracle.hpp"
#include "surfhom/partition.hpp"
#include "surfhom/surface_count.hpp"
#include "surfhom/symfunc.hpp"
#include "surfhom/verify.hpp"
#include "surfhom/word.hpp"

using json = nlohmann::ordered_json;
using namespace surfhom;

namespace {

struct MismatchError : Error {
    using Error::Error;
};

struct Options {
    bool machine = false;
    unsigned workers = 1;
    std::string budget;
    std::size_t order_cap = kDefaultOrderCap;

    Budget make_budget() const {
        Budget b;
        b.workers = workers;
        if (!budget.empty()) {
            b.max_tuples = BigInt(budget);
        } else if (const char* env = std::getenv("SURFHOM_BUDGET")) {
            b.max_tuples = BigInt(env);
        }
        return b;
    }
};

// "@path" arguments are read from the named file; handy for multi-line
// perms: group specs.
std::string read_arg(const std::string& value) {
    if (value.empty() || value[0] != '@') return value;
    std::ifstream in(value.substr(1));
    if (!in) throw Error("cannot read file '" + value.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

struct GroupContext {
    FiniteGroup G;
    ConjugacyClassTable classes;
    explicit GroupContext(const std::string& spec, std::size_t cap)
        : G(build_group(read_arg(spec), cap)), classes(conjugacy_classes(G)) {}
};

// Boundary class names: "#<index>", "id", "trans", "cyc<k>", or cycle
// lengths joined with '+', e.g. "2+2". Cycle-type names must be unambiguous.
int resolve_class_name(const std::string& name, const GroupContext& ctx) {
    if (name.empty()) throw UnknownClassName("empty class name");
    if (name[0] == '#') {
        int idx = -1;
        try {
            idx = std::stoi(name.substr(1));
        } catch (...) {
            throw UnknownClassName("bad class index '" + name + "'");
        }
        if (idx < 0 || idx >= static_cast<int>(ctx.classes.count()))
            throw UnknownClassName("class index out of range: " + name);
        return idx;
    }
    if (name == "id") return 0;
    std::vector<unsigned> want;
    if (name == "trans") {
        want = {2};
    } else if (name.rfind("cyc", 0) == 0) {
        try {
            want = {static_cast<unsigned>(std::stoul(name.substr(3)))};
        } catch (...) {
            throw UnknownClassName("bad cycle-type name '" + name + "'");
        }
    } else {
        std::size_t pos = 0;
        while (pos < name.size()) {
            std::size_t next = name.find('+', pos);
            std::string part = name.substr(pos, next == std::string::npos ? next : next - pos);
            try {
                want.push_back(static_cast<unsigned>(std::stoul(part)));
            } catch (...) {
                throw UnknownClassName("bad cycle-type name '" + name + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (want.empty()) throw UnknownClassName("bad class name '" + name + "'");
    }
    std::sort(want.begin(), want.end(), std::greater<unsigned>());
    std::vector<int> matches;
    for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
        Partition type = cycle_type(ctx.G.element(ctx.classes.cls((int)c).representative));
        std::vector<unsigned> moved;
        for (unsigned len : type.parts)
            if (len >= 2) moved.push_back(len);
        if (moved == want) matches.push_back((int)c);
    }
    if (matches.empty()) throw UnknownClassName("no class has cycle type '" + name + "'");
    if (matches.size() > 1)
        throw AmbiguousClassName("cycle type '" + name + "' names " +
                                 std::to_string(matches.size()) +
                                 " classes; use #<index> instead");
    return matches[0];
}

std::vector<int> resolve_boundary(const std::vector<std::string>& raw, const GroupContext& ctx) {
    std::vector<int> out;
    for (const std::string& chunk : raw) {
        std::size_t pos = 0;
        while (pos <= chunk.size()) {
            std::size_t next = chunk.find(',', pos);
            std::string token =
                chunk.substr(pos, next == std::string::npos ? next : next - pos);
            if (!token.empty()) out.push_back(resolve_class_name(token, ctx));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    return out;
}

void emit(const Options& opts, const json& doc, const std::string& human) {
    if (opts.machine)
        std::cout << doc.dump() << "\n";
    else
        std::cout << human;
}

json terms_json(const std::vector<Cyclotomic>& terms) {
    json arr = json::array();
    for (const Cyclotomic& t : terms) arr.push_back(t.str());
    return arr;
}

std::string human_terms(const CharacterTable& table, const std::vector<Cyclotomic>& terms) {
    std::string out;
    for (std::size_t chi = 0; chi < terms.size(); ++chi)
        out += "  chi" + std::to_string(chi) + " (degree " +
               std::to_string(table.degree((int)chi)) + ", fs " +
               std::to_string(table.fs_indicator((int)chi)) + "): " + terms[chi].str() + "\n";
    return out;
}

int run_table(const Options& opts, const std::string& group_spec) {
    GroupContext ctx(group_spec, opts.order_cap);
    CharacterTable table = compute_character_table(ctx.G, ctx.classes);

    json classes = json::array();
    std::string human = "group: " + group_spec + "\norder: " + std::to_string(ctx.G.order()) +
                        "\nexponent: " + std::to_string(ctx.G.exponent()) + "\nclasses:\n";
    for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
        const ConjugacyClass& cc = ctx.classes.cls((int)c);
        std::string rep = ctx.G.element(cc.representative).cycle_string();
        unsigned long ord = ctx.G.element_order(cc.representative);
        classes.push_back({{"index", (int)c},
                           {"size", std::to_string(cc.size())},
                           {"representative", rep},
                           {"element_order", std::to_string(ord)}});
        human += "  #" + std::to_string(c) + " size=" + std::to_string(cc.size()) +
                 " order=" + std::to_string(ord) + " rep=" + rep + "\n";
    }
    json chars = json::array();
    human += "characters:\n";
    for (std::size_t r = 0; r < table.size(); ++r) {
        json values = json::array();
        std::string row;
        for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
            std::string v = table.value((int)r, (int)c).str();
            values.push_back(v);
            row += (c ? ", " : "") + v;
        }
        chars.push_back({{"index", (int)r},
                         {"degree", std::to_string(table.degree((int)r))},
                         {"fs_indicator", table.fs_indicator((int)r)},
                         {"values", values}});
        human += "  chi" + std::to_string(r) + ": degree=" +
                 std::to_string(table.degree((int)r)) + " fs=" +
                 std::to_string(table.fs_indicator((int)r)) + " values: " + row + "\n";
    }
    json doc = {{"command", "table"},
                {"group", group_spec},
                {"parameters", json::object()},
                {"result",
                 {{"order", std::to_string(ctx.G.order())},
                  {"exponent", std::to_string(ctx.G.exponent())},
                  {"classes", classes},
                  {"characters", chars}}}};
    emit(opts, doc, human);
    return 0;
}

int run_count(const Options& opts, const std::string& group_spec, SurfaceKind kind,
              unsigned genus, const std::vector<std::string>& boundary_raw, bool with_terms,
              bool compare) {
    GroupContext ctx(group_spec, opts.order_cap);
    CharacterTable table = compute_character_table(ctx.G, ctx.classes);
    SurfaceSpec surface{kind, genus, resolve_boundary(boundary_raw, ctx)};

    HomCount count = count_surface(ctx.G, table, ctx.classes, surface);

    std::optional<BigInt> oracle;
    if (compare) {
        oracle = oracle_count_with_boundary(surface_relator_word(kind, genus), ctx.G,
                                            ctx.classes, surface.boundary, opts.make_budget());
    }

    json params = {{"kind", kind == SurfaceKind::Orientable ? "orientable" : "nonorientable"},
                   {"genus", genus},
                   {"boundary", surface.boundary}};
    json result = {{"value", count.value.get_str()}};
    std::string human = count.value.get_str() + "\n";
    if (with_terms) human += human_terms(table, count.terms);
    if (oracle) {
        result["oracle"] = oracle->get_str();
        result["match"] = *oracle == count.value;
        human += "oracle: " + oracle->get_str() + (*oracle == count.value ? " (match)\n"
                                                                          : " (MISMATCH)\n");
    }
    json doc = {{"command", "count"},
                {"group", group_spec},
                {"parameters", params},
                {"result", result}};
    if (with_terms) doc["terms"] = terms_json(count.terms);
    emit(opts, doc, human);
    if (oracle && *oracle != count.value)
        throw MismatchError("formula " + count.value.get_str() + " != oracle " +
                            oracle->get_str());
    return 0;
}

int run_count_word(const Options& opts, const std::string& group_spec, unsigned rank,
                   const std::string& word_text, const std::vector<std::string>& boundary_raw,
                   bool with_terms, bool compare) {
    GroupContext ctx(group_spec, opts.order_cap);
    CharacterTable table = compute_character_table(ctx.G, ctx.classes);
    std::vector<int> boundary = resolve_boundary(boundary_raw, ctx);
    Word gamma = parse_word(read_arg(word_text), rank);

    HomCount count = count_general(gamma, ctx.G, table, ctx.classes, boundary,
                                   opts.make_budget());
    std::optional<BigInt> oracle;
    if (compare)
        oracle = oracle_count_with_boundary(gamma, ctx.G, ctx.classes, boundary,
                                            opts.make_budget());

    json params = {{"rank", rank}, {"word", word_text}, {"boundary", boundary}};
    json result = {{"value", count.value.get_str()}};
    std::string human = count.value.get_str() + "\n";
    if (with_terms) human += human_terms(table, count.terms);
    if (oracle) {
        result["oracle"] = oracle->get_str();
        result["match"] = *oracle == count.value;
        human += "oracle: " + oracle->get_str() + (*oracle == count.value ? " (match)\n"
                                                                          : " (MISMATCH)\n");
    }
    json doc = {{"command", "count-word"},
                {"group", group_spec},
                {"parameters", params},
                {"result", result}};
    if (with_terms) doc["terms"] = terms_json(count.terms);
    emit(opts, doc, human);
    if (oracle && *oracle != count.value)
        throw MismatchError("formula " + count.value.get_str() + " != oracle " +
                            oracle->get_str());
    return 0;
}

int run_oracle(const Options& opts, const std::string& group_spec, unsigned rank,
               const std::string& word_text, const std::vector<std::string>& boundary_raw,
               bool compare) {
    GroupContext ctx(group_spec, opts.order_cap);
    std::vector<int> boundary = resolve_boundary(boundary_raw, ctx);
    Word gamma = parse_word(read_arg(word_text), rank);

    BigInt brute =
        oracle_count_with_boundary(gamma, ctx.G, ctx.classes, boundary, opts.make_budget());
    std::optional<BigInt> formula;
    if (compare) {
        CharacterTable table = compute_character_table(ctx.G, ctx.classes);
        formula =
            count_general(gamma, ctx.G, table, ctx.classes, boundary, opts.make_budget()).value;
    }

    json params = {{"rank", rank}, {"word", word_text}, {"boundary", boundary}};
    json result = {{"value", brute.get_str()}};
    std::string human = brute.get_str() + "\n";
    if (formula) {
        result["formula"] = formula->get_str();
        result["match"] = *formula == brute;
        human += "formula: " + formula->get_str() + (*formula == brute ? " (match)\n"
                                                                       : " (MISMATCH)\n");
    }
    json doc = {{"command", "oracle"},
                {"group", group_spec},
                {"parameters", params},
                {"result", result}};
    emit(opts, doc, human);
    if (formula && *formula != brute)
        throw MismatchError("oracle " + brute.get_str() + " != formula " + formula->get_str());
    return 0;
}

int run_verify(const Options& opts, const std::string& suite) {
    std::vector<std::string> names =
        suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
    Budget budget = opts.make_budget();

    json suites = json::array();
    std::string human;
    int passed = 0, failed = 0;
    for (const std::string& name : names) {
        SuiteResult result = run_verify_suite(name, budget);
        json checks = json::array();
        human += "suite " + name + ":\n";
        for (const CheckResult& c : result.checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            human += std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.name + " (" +
                     c.detail + ")\n";
            (c.passed ? passed : failed)++;
        }
        suites.push_back({{"suite", name}, {"checks", checks}});
    }
    human += std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
    json doc = {{"command", "verify"},
                {"parameters", {{"suite", suite}}},
                {"result", {{"suites", suites}, {"passed", passed}, {"failed", failed}}}};
    emit(opts, doc, human);
    if (failed > 0) throw MismatchError(std::to_string(failed) + " verify checks failed");
    return 0;
}

Partition parse_partition_arg(const std::string& text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (!token.empty()) {
            try {
                parts.push_back(static_cast<unsigned>(std::stoul(token)));
            } catch (...) {
                throw Error("bad partition '" + text + "'");
            }
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

int run_symfunc_hooks(const Options& opts, unsigned weight) {
    json rows = json::array();
    std::string human;
    for (const Partition& lambda : partitions_of(weight)) {
        BigInt hooks = hook_product(lambda);
        BigInt degree = factorial(weight) / hooks;
        rows.push_back({{"partition", lambda.str()},
                        {"hook_product", hooks.get_str()},
                        {"degree", degree.get_str()}});
        human += lambda.str() + ": hook product " + hooks.get_str() + ", degree " +
                 degree.get_str() + "\n";
    }
    json doc = {{"command", "symfunc-hooks"},
                {"parameters", {{"weight", weight}}},
                {"result", rows}};
    emit(opts, doc, human);
    return 0;
}

int run_symfunc_schur(const Options& opts, const std::string& lambda_text) {
    Partition lambda = parse_partition_arg(lambda_text);
    PBasisVector s = schur_in_p(lambda);
    json coeffs = json::array();
    for (const auto& [mu, c] : s.coeffs)
        coeffs.push_back({{"mu", Partition(std::vector<unsigned>(mu)).str()},
                          {"coefficient", c.get_str()}});
    json doc = {{"command", "symfunc-schur"},
                {"parameters", {{"lambda", lambda.str()}}},
                {"result", {{"p_expansion", s.str()}, {"coefficients", coeffs}}}};
    emit(opts, doc, "s" + lambda.str() + " = " + s.str() + "\n");
    return 0;
}

int run_symfunc_genfun(const Options& opts, long exponent, unsigned count) {
    std::vector<BigInt> coeffs = genfun_coefficients(exponent, count);
    json arr = json::array();
    std::string human;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        arr.push_back(coeffs[n].get_str());
        human += (n ? ", " : "") + coeffs[n].get_str();
    }
    json doc = {{"command", "symfunc-genfun"},
                {"parameters", {{"exponent", exponent}, {"count", count}}},
                {"result", arr}};
    emit(opts, doc, human + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact surface-group homomorphism counting over finite groups"};
    app.require_subcommand(1);

    Options opts;
    app.add_flag("--machine", opts.machine, "emit one JSON object instead of human output");
    app.add_option("--workers", opts.workers, "parallel workers for brute-force enumeration");
    app.add_option("--budget", opts.budget,
                   "max enumerated tuples (overrides SURFHOM_BUDGET, default 1e8)");
    app.add_option("--order-cap", opts.order_cap, "largest allowed group order");

    std::string group_spec, word_text, suite = "all", lambda_text;
    std::vector<std::string> boundary;
    unsigned rank = 1, genus_g = 0, genus_k = 1, weight = 1, gf_count = 10;
    long gf_exponent = 0;
    bool orientable = false, nonorientable = false, with_terms = false, compare = false;

    CLI::App* table_cmd = app.add_subcommand("table", "print conjugacy and character data");
    table_cmd->add_option("--group", group_spec, "group spec")->required();

    CLI::App* count_cmd = app.add_subcommand("count", "surface homomorphism count");
    count_cmd->add_option("--group", group_spec, "group spec")->required();
    count_cmd->add_flag("--orientable", orientable, "orientable surface");
    count_cmd->add_flag("--nonorientable", nonorientable, "nonorientable surface");
    CLI::Option* gopt = count_cmd->add_option("-g,--genus", genus_g, "orientable genus");
    CLI::Option* kopt = count_cmd->add_option("-k,--crosscaps", genus_k, "nonorientable genus");
    count_cmd->add_option("--boundary", boundary, "boundary classes (comma separated)");
    count_cmd->add_flag("--terms", with_terms, "print per-character summands");
    count_cmd->add_flag("--compare", compare, "cross-check against brute force");

    CLI::App* word_cmd = app.add_subcommand("count-word", "word-relator counting engine");
    word_cmd->add_option("--group", group_spec, "group spec")->required();
    word_cmd->add_option("--rank", rank, "free group rank")->required();
    word_cmd->add_option("--word", word_text, "word in the DSL")->required();
    word_cmd->add_option("--boundary", boundary, "boundary classes (comma separated)");
    word_cmd->add_flag("--terms", with_terms, "print per-character summands");
    word_cmd->add_flag("--compare", compare, "cross-check against brute force");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force solution count");
    oracle_cmd->add_option("--group", group_spec, "group spec")->required();
    oracle_cmd->add_option("--rank", rank, "free group rank")->required();
    oracle_cmd->add_option("--word", word_text, "word in the DSL")->required();
    oracle_cmd->add_option("--boundary", boundary, "boundary classes (comma separated)");
    oracle_cmd->add_flag("--compare", compare, "assert agreement with the formula");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named identity suite");
    verify_cmd
        ->add_option("--suite", suite,
                     "solomon | tuple-sum | linear-limit | symfunc-theorem | specialization |"
                     " genfun | all")
        ->required();

    CLI::App* symfunc_cmd = app.add_subcommand("symfunc", "symmetric function utilities");
    symfunc_cmd->require_subcommand(1);
    CLI::App* hooks_cmd = symfunc_cmd->add_subcommand("hooks", "hook products and degrees");
    hooks_cmd->add_option("--weight", weight, "partition weight n")->required();
    CLI::App* schur_cmd = symfunc_cmd->add_subcommand("schur", "Schur function in the p basis");
    schur_cmd->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
    CLI::App* genfun_cmd = symfunc_cmd->add_subcommand("genfun", "generating function values");
    genfun_cmd->add_option("--exponent", gf_exponent, "exponent e in (n!/H)^e")->required();
    genfun_cmd->add_option("--count", gf_count, "highest coefficient index N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(table_cmd)) return run_table(opts, group_spec);
        if (app.got_subcommand(count_cmd)) {
            bool has_g = gopt->count() > 0, has_k = kopt->count() > 0;
            if (orientable && nonorientable)
                throw Error("choose one of --orientable/--nonorientable");
            if (has_g == has_k)
                throw Error("give exactly one of -g <genus> or -k <crosscaps>");
            if ((has_g && nonorientable) || (has_k && orientable))
                throw Error("genus flag does not match the surface kind");
            SurfaceKind kind = has_g ? SurfaceKind::Orientable : SurfaceKind::Nonorientable;
            unsigned genus = has_g ? genus_g : genus_k;
            return run_count(opts, group_spec, kind, genus, boundary, with_terms, compare);
        }
        if (app.got_subcommand(word_cmd))
            return run_count_word(opts, group_spec, rank, word_text, boundary, with_terms,
                                  compare);
        if (app.got_subcommand(oracle_cmd))
            return run_oracle(opts, group_spec, rank, word_text, boundary, compare);
        if (app.got_subcommand(verify_cmd)) return run_verify(opts, suite);
        if (app.got_subcommand(symfunc_cmd)) {
            if (symfunc_cmd->got_subcommand(hooks_cmd)) return run_symfunc_hooks(opts, weight);
            if (symfunc_cmd->got_subcommand(schur_cmd))
                return run_symfunc_schur(opts, lambda_text);
            if (symfunc_cmd->got_subcommand(genfun_cmd))
                return run_symfunc_genfun(opts, gf_exponent, gf_count);
        }
        throw Error("no subcommand selected");
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const LiftInconsistent& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const NonIntegerResult& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const NonIndicatorValue& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const NonIntegerIndicator& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
