#include "slfree/cli.hpp"

#include "slfree/parser.hpp"
#include "slfree/rep.hpp"
#include "slfree/structure.hpp"
#include "slfree/tensor.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

namespace slfree {
namespace {

void emit(std::ostream& out, const nlohmann::json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

struct ClassifyInput {
    int n = 0;
    std::vector<std::vector<Polynomial>> pij;
    std::vector<Polynomial> qi;
};

ClassifyInput read_classify_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    ClassifyInput input;
    input.n = j.at("n").get<int>();
    if (input.n < 1) throw std::runtime_error("n must be >= 1");
    int n = input.n;
    input.pij.assign(static_cast<std::size_t>(n),
                     std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(n)));
    const auto& pij = j.at("pij");
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n; ++k) {
            std::string key = std::to_string(i) + "," + std::to_string(k);
            if (!pij.contains(key)) throw std::runtime_error("missing pij entry \"" + key + "\"");
            input.pij[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] =
                parse_polynomial(pij.at(key).get<std::string>(), n);
        }
    }
    const auto& qi = j.at("qi");
    for (int i = 1; i <= n; ++i) {
        std::string key = std::to_string(i);
        if (!qi.contains(key)) throw std::runtime_error("missing qi entry \"" + key + "\"");
        input.qi.push_back(parse_polynomial(qi.at(key).get<std::string>(), n));
    }
    return input;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact construction and analysis of sl(n+1)-modules on polynomial rings"};
    app.name("slfree");
    app.require_subcommand(1);

    int n = 1;
    int jobs = 1;
    int k = 0;
    int m = 0;
    std::string p_text;
    std::string element;
    std::string on_text;
    std::string input_path;
    int bound = 0;
    int degree = 0;
    bool pretty = false;

    auto add_pretty = [&](CLI::App* cmd) { cmd->add_flag("--pretty", pretty, "indent JSON"); };

    CLI::App* verify = app.add_subcommand("verify", "build M(p) and check every bracket pair");
    verify->add_option("--n", n, "rank parameter")->required();
    verify->add_option("--p", p_text, "parameter polynomial")->required();
    verify->add_option("--jobs", jobs, "parallel workers");
    add_pretty(verify);

    CLI::App* act = app.add_subcommand("act", "apply one basis element to a polynomial");
    act->add_option("--n", n, "rank parameter")->required();
    act->add_option("--p", p_text, "parameter polynomial")->required();
    act->add_option("--element", element, "basis element, e(i,j) or h(i)")->required();
    act->add_option("--on", on_text, "polynomial acted on")->required();
    add_pretty(act);

    CLI::App* simplicity =
        app.add_subcommand("simplicity", "closed-form prediction plus the submodule oracle");
    simplicity->add_option("--n", n, "rank parameter")->required();
    simplicity->add_option("--p", p_text, "parameter polynomial")->required();
    simplicity->add_option("--bound", bound, "search bound for the oracle");
    add_pretty(simplicity);

    CLI::App* classify =
        app.add_subcommand("classify", "recover p from generator tables in a JSON file");
    classify->add_option("--input", input_path, "JSON file with n, pij, qi")->required();
    add_pretty(classify);

    CLI::App* sl2seq = app.add_subcommand("sl2-sequence", "exact-sequence witness for V(p)");
    sl2seq->add_option("--p", p_text, "parameter polynomial in x1")->required();
    add_pretty(sl2seq);

    CLI::App* tsplit = app.add_subcommand("tensor-split", "split V(p) (x) L(1) explicitly");
    tsplit->add_option("--p", p_text, "parameter polynomial in x1")->required();
    add_pretty(tsplit);

    CLI::App* tdec = app.add_subcommand("tensor-decompose", "decompose V(p) (x) L(k)");
    tdec->add_option("--p", p_text, "parameter polynomial in x1")->required();
    tdec->add_option("--k", k, "finite factor L(k)")->required();
    tdec->add_option("--degree", degree, "certification degree");
    add_pretty(tdec);

    CLI::App* cg = app.add_subcommand("cg", "Clebsch-Gordan components of L(k) (x) L(m)");
    cg->add_option("--k", k, "first weight")->required();
    cg->add_option("--m", m, "second weight")->required();
    add_pretty(cg);

    std::vector<const char*> argv;
    argv.push_back("slfree");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            Polynomial p = parse_polynomial(p_text, n);
            VerificationReport report = verify_representation(build_rep(n, p), jobs);
            emit(out, report.to_json(), pretty);
            return report.ok() ? 0 : 1;
        }
        if (act->parsed()) {
            Polynomial p = parse_polynomial(p_text, n);
            Polynomial f = parse_polynomial(on_text, n);
            LieBasisElement b = LieBasisElement::parse(element, n);
            Representation rep = build_rep(n, p);
            Polynomial result = rep.action(b).apply(f);
            emit(out,
                 {{"n", n},
                  {"p", p.to_string()},
                  {"element", b.to_string()},
                  {"on", f.to_string()},
                  {"result", result.to_string()}},
                 pretty);
            return 0;
        }
        if (simplicity->parsed()) {
            Polynomial p = parse_polynomial(p_text, n);
            std::optional<int> b;
            if (simplicity->count("--bound") > 0) b = bound;
            SubmoduleReport report = analyze_submodules(n, p, b);
            emit(out, report.to_json(), pretty);
            return 0;
        }
        if (classify->parsed()) {
            ClassifyInput input = read_classify_input(input_path);
            ClassifyOutcome outcome = classify_from_action(input.n, input.pij, input.qi);
            if (outcome.consistent) {
                emit(out, {{"n", input.n}, {"consistent", true}, {"p", outcome.p.to_string()}},
                     pretty);
                return 0;
            }
            emit(out, {{"n", input.n}, {"consistent", false}, {"violated", outcome.violated}},
                 pretty);
            return 1;
        }
        if (sl2seq->parsed()) {
            Polynomial p = parse_polynomial(p_text, 1);
            Sl2SequenceWitness witness = sl2_exact_sequence_witness(p);
            nlohmann::json j = witness.to_json();
            j["p"] = p.to_string();
            emit(out, j, pretty);
            return (!witness.applicable || witness.intertwiner_ok) ? 0 : 1;
        }
        if (tsplit->parsed()) {
            Polynomial p = parse_polynomial(p_text, 1);
            try {
                SplitResult result = split_tensor_L1(p);
                nlohmann::json j = result.to_json();
                j["p"] = p.to_string();
                emit(out, j, pretty);
                return result.checks.all() ? 0 : 1;
            } catch (const DegenerateSplit& e) {
                emit(out, {{"p", p.to_string()}, {"error", "degenerate-split"}}, pretty);
                err << "error: " << e.what() << "\n";
                return 1;
            }
        }
        if (tdec->parsed()) {
            Polynomial p = parse_polynomial(p_text, 1);
            std::optional<int> d;
            if (tdec->count("--degree") > 0) d = degree;
            DecomposeResult result = decompose_tensor(p, k, d);
            emit(out, result.to_json(p, k), pretty);
            return result.ok ? 0 : 1;
        }
        if (cg->parsed()) {
            emit(out, {{"k", k}, {"m", m}, {"components", clebsch_gordan_components(k, m)}},
                 pretty);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace slfree
