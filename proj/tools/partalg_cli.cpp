// Command-line front end: abacus renderings, diagram products, block
// decompositions, decomposition matrices (theorem and oracle), and the
// verification pipeline.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
// 3 unsupported case for the theorem method.

#include <CLI11.hpp>
#include <iostream>

#include "partalg/decomposition.hpp"
#include "partalg/io.hpp"
#include "partalg/verify.hpp"

namespace {

using namespace partalg;

FieldSpec make_spec(int p, bool char0, const std::string& delta_token) {
    FieldSpec spec;
    spec.characteristic = char0 ? 0 : p;
    if (delta_token == "x") {
        spec.delta_is_generator = true;
    } else if (delta_token == "ss") {
        spec.delta_nonintegral = true;
    } else {
        size_t pos = 0;
        spec.delta_int = std::stol(delta_token, &pos);
        if (pos != delta_token.size())
            throw CLI::ValidationError("--delta", "expected an integer, 'x', or 'ss'");
    }
    spec.validate();
    return spec;
}

int cmd_abacus(const std::string& partition_text, long beads, int p,
               const std::string& delta_token, const std::string& format) {
    Partition lam = Partition::parse(partition_text);
    auto beta = beta_sequence(lam, beads);
    bool with_delta = !delta_token.empty();
    long delta = with_delta ? std::stol(delta_token) : 0;

    if (format == "json") {
        if (with_delta) {
            std::cout << to_json(marked_abacus(lam, beads, delta, p)) << "\n";
        } else {
            MarkedAbacus plain{p, beads, beta.values, 0};
            std::cout << to_json(plain) << "\n";
        }
        return 0;
    }

    std::cout << "beta(" << lam.str() << "," << beads << ") = (";
    for (size_t i = 0; i < beta.values.size(); ++i)
        std::cout << (i ? "," : "") << beta.values[i];
    std::cout << ")\n";
    auto g = gamma(lam, beads, p);
    std::cout << "Gamma = (";
    for (size_t i = 0; i < g.counts.size(); ++i) std::cout << (i ? "," : "") << g.counts[i];
    std::cout << ")\n";
    std::cout << p << "-core = " << p_core(lam, p).str() << "\n";
    if (with_delta) {
        auto m = marked_abacus(lam, beads, delta, p);
        auto gd = gamma_delta(lam, beads, delta, p);
        std::cout << "beta_delta = (";
        auto bd = beta_delta(lam, beads, delta);
        for (size_t i = 0; i < bd.size(); ++i) std::cout << (i ? "," : "") << bd[i];
        std::cout << ")\nmarker runner = " << m.marker << "\nGamma_delta = (";
        for (size_t i = 0; i < gd.counts.size(); ++i)
            std::cout << (i ? "," : "") << gd.counts[i];
        std::cout << ")\n" << render_abacus(m);
    }
    return 0;
}

int cmd_multiply(const std::string& a_text, const std::string& b_text, int n, bool symbolic,
                 const std::string& format) {
    Diagram a = Diagram::parse(a_text, n);
    Diagram b = Diagram::parse(b_text, n);
    if (symbolic) {
        auto prod = multiply_elements(AlgebraElement(a), AlgebraElement(b));
        std::cout << prod.str() << "\n";
        return 0;
    }
    auto prod = multiply(a, b);
    if (format == "json") {
        std::cout << "{\"delta_power\":" << prod.delta_power
                  << ",\"diagram\":" << to_json(prod.diagram) << "}\n";
    } else {
        std::cout << "d^" << prod.delta_power << " * " << prod.diagram.str() << "\n";
    }
    return 0;
}

int cmd_blocks(int n, int p, bool char0, const std::string& delta_token,
               const std::string& format) {
    BlockDecomposition blocks;
    if (char0) {
        if (delta_token == "ss")
            blocks = blocks_char0(n, 0, false);
        else
            blocks = blocks_char0(n, std::stol(delta_token));
    } else {
        blocks = blocks_charp(n, p, std::stol(delta_token));
    }
    if (format == "json")
        std::cout << to_json(blocks) << "\n";
    else
        std::cout << render_blocks(blocks);
    return 0;
}

int cmd_decomp(int n, int p, bool char0, const std::string& delta_token,
               const std::string& method, const std::string& format, uint64_t seed, long bound) {
    if (char0) {
        // Characteristic 0 is covered by Martin's theorem directly.
        LabeledMatrix m = delta_token == "ss" ? decomp_char0(n, 0, false)
                                              : decomp_char0(n, std::stol(delta_token));
        FieldSpec spec;
        spec.characteristic = 0;
        if (delta_token == "ss")
            spec.delta_nonintegral = true;
        else
            spec.delta_int = std::stol(delta_token);
        if (format == "json")
            std::cout << to_json(m, n, spec) << "\n";
        else if (format == "csv")
            std::cout << to_csv(m);
        else
            std::cout << render_labeled_matrix(m);
        return 0;
    }

    FieldSpec spec = make_spec(p, false, delta_token);
    auto emit = [&](const LabeledMatrix& m) {
        if (format == "json")
            std::cout << to_json(m, n, spec) << "\n";
        else if (format == "csv")
            std::cout << to_csv(m);
        else
            std::cout << render_labeled_matrix(m);
    };

    std::optional<LabeledMatrix> theorem, oracle;
    if (method == "theorem" || method == "both")
        theorem = decomp_charp_theorem({n, spec, seed, bound});
    if (method == "oracle" || method == "both")
        oracle = decomposition_matrix_oracle(n, spec, seed, bound);

    if (method == "theorem") {
        emit(*theorem);
    } else if (method == "oracle") {
        emit(*oracle);
    } else {
        std::cout << "== theorem ==\n";
        emit(*theorem);
        std::cout << "== oracle ==\n";
        emit(*oracle);
        if (!(*theorem == *oracle)) {
            std::cout << "== DIFF ==\n";
            for (const auto& r : theorem->rows)
                for (const auto& c : theorem->cols)
                    if (theorem->at(r, c) != oracle->at(r, c))
                        std::cout << "  (" << r.str() << ", " << c.str()
                                  << "): theorem " << theorem->at(r, c) << ", oracle "
                                  << oracle->at(r, c) << "\n";
            return 1;
        }
        std::cout << "== methods agree ==\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    auto results = run_verify(suite, seed);
    std::cout << format_results(results);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition algebra blocks and decomposition matrices"};
    app.require_subcommand(1);

    std::string partition_text, diag_a, diag_b, delta_token = "1", format = "text";
    std::string method = "both", suite = "all";
    int n = 1, p = 3;
    long beads = 0, bound = partalg::kDefaultOracleBound;
    uint64_t seed = partalg::kDefaultSeed;
    bool symbolic = false, char0 = false;

    auto* abacus = app.add_subcommand("abacus", "beta-sequences, cores and marked abaci");
    abacus->add_option("partition", partition_text, "comma-separated parts, '-' for empty")
        ->required();
    abacus->add_option("--beads", beads, "bead count b")->required();
    abacus->add_option("--p", p, "prime number of runners")->required();
    std::string abacus_delta;
    abacus->add_option("--delta", abacus_delta, "integer delta for the marked abacus");
    abacus->add_option("--format", format, "text|json");

    auto* mult = app.add_subcommand("multiply", "concatenation product of two diagrams");
    mult->add_option("a", diag_a, "first diagram, blocks separated by '|'")->required();
    mult->add_option("b", diag_b, "second diagram")->required();
    mult->add_option("--n", n, "diagram size")->required();
    mult->add_flag("--symbolic", symbolic, "print as a symbolic algebra element");
    mult->add_option("--format", format, "text|json");

    auto* blocks = app.add_subcommand("blocks", "block decomposition of Lambda_{<=n}");
    blocks->add_option("--n", n, "algebra size")->required();
    blocks->add_option("--p", p, "characteristic (omit with --char0)");
    blocks->add_flag("--char0", char0, "characteristic 0");
    blocks->add_option("--delta", delta_token, "integer delta, or 'ss' with --char0")
        ->required();
    blocks->add_option("--format", format, "text|json");

    auto* decomp = app.add_subcommand("decomp", "decomposition matrix");
    decomp->add_option("--n", n, "algebra size")->required();
    decomp->add_option("--p", p, "characteristic (omit with --char0)");
    decomp->add_flag("--char0", char0, "characteristic 0");
    decomp->add_option("--delta", delta_token, "integer, 'x' (F_{p^2} generator), or 'ss'")
        ->required();
    decomp->add_option("--method", method, "theorem|oracle|both");
    decomp->add_option("--format", format, "text|json|csv");
    decomp->add_option("--seed", seed, "oracle random seed");
    decomp->add_option("--bound", bound, "largest permitted cell-module dimension");

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--suite", suite, "core|paper|all");
    verify->add_option("--seed", seed, "oracle random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (abacus->parsed()) return cmd_abacus(partition_text, beads, p, abacus_delta, format);
        if (mult->parsed()) return cmd_multiply(diag_a, diag_b, n, symbolic, format);
        if (blocks->parsed()) return cmd_blocks(n, p, char0, delta_token, format);
        if (decomp->parsed())
            return cmd_decomp(n, p, char0, delta_token, method, format, seed, bound);
        if (verify->parsed()) return cmd_verify(suite, seed);
    } catch (const partalg::unsupported_case& e) {
        std::cerr << "unsupported case: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const partalg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
