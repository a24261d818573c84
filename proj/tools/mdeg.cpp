// mdeg: multidegree supports, polymatroids, and flag degrees from the
// command line. Exit codes: 0 = success, 1 = a check answered
// fail/violation, 2 = malformed input or arguments.

#include "mdeg/arrangement.hpp"
#include "mdeg/chow.hpp"
#include "mdeg/flag.hpp"
#include "mdeg/matrix.hpp"
#include "mdeg/points.hpp"
#include "mdeg/polymatroid.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitBadInput = 2;

std::string read_input(const std::string& path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw mdeg::ParseError("cannot open '" + path + "'");
        }
        buffer << in.rdbuf();
    }
    return buffer.str();
}

mdeg::RankFunction load_rankfn(const std::string& path) {
    std::istringstream in(read_input(path));
    return mdeg::parse_rankfn(in);
}

mdeg::SubspaceArrangement load_arrangement(const std::string& path) {
    std::istringstream in(read_input(path));
    return mdeg::parse_arrangement(in);
}

int cmd_check_rank(const std::string& path) {
    const mdeg::RankFunction f = load_rankfn(path);
    const mdeg::CheckResult poly = mdeg::check_polymatroid(f);
    std::cout << "polymatroid: " << (poly.ok ? "valid" : "invalid") << '\n';
    for (const auto& v : poly.violations) {
        std::cout << "  " << v.describe() << '\n';
    }
    if (poly.ok) {
        const mdeg::CheckResult mat = mdeg::check_matroid(f);
        std::cout << "matroid: " << (mat.ok ? "yes" : "no") << '\n';
        for (const auto& v : mat.violations) {
            std::cout << "  " << v.describe() << '\n';
        }
    }
    return poly.ok ? kExitOk : kExitVerdictFail;
}

int cmd_polytope(const std::string& path) {
    mdeg::print_points(std::cout, mdeg::base_polytope_points(load_rankfn(path)));
    return kExitOk;
}

int cmd_msupp(const std::string& path) {
    std::istringstream in(read_input(path));
    const mdeg::MultiClass f = mdeg::parse_chowclass(in);
    if (!mdeg::is_homogeneous(f).has_value()) {
        std::cerr << "warning: class is not homogeneous; support mixes coordinate sums\n";
    }
    if (!mdeg::is_effective(f)) {
        std::cerr << "warning: class has non-positive coefficients; "
                     "effective classes have positive multidegrees\n";
    }
    mdeg::print_points(std::cout, mdeg::msupp(f));
    return kExitOk;
}

int cmd_verify_support(const std::string& path) {
    const std::string text = read_input(path);
    std::istringstream sniff(text);
    std::istringstream in(text);
    std::string head;
    std::istringstream(mdeg::next_data_line(sniff)) >> head;

    mdeg::LatticePointSet support;
    if (head == "chowclass") {
        support = mdeg::msupp(mdeg::parse_chowclass(in));
    } else if (head == "points") {
        support = mdeg::parse_points(in);
    } else {
        throw mdeg::ParseError("expected a chowclass or points file");
    }

    const mdeg::SupportTheoremResult res = mdeg::verify_support_theorem(support);
    std::cout << "support points: " << support.points.size() << '\n';
    std::cout << "polytope lattice points: " << res.q.points.size() << '\n';
    std::cout << "support equals polytope: " << (res.holds ? "yes" : "no") << '\n';
    if (res.witness.has_value()) {
        std::cout << "missing point:";
        for (int v : *res.witness) {
            std::cout << ' ' << v;
        }
        std::cout << '\n';
    }
    return res.holds ? kExitOk : kExitVerdictFail;
}

int cmd_rank_from_arrangement(const std::string& path) {
    mdeg::print_rankfn(std::cout, mdeg::rank_function(load_arrangement(path)));
    return kExitOk;
}

int cmd_li_class(const std::string& path, const std::vector<int>& dims) {
    mdeg::print_chowclass(std::cout, mdeg::li_multidegree(load_arrangement(path), dims));
    return kExitOk;
}

int cmd_li_oracle(const std::string& path, const std::vector<int>& point, std::uint64_t seed,
                  int trials) {
    std::cout << mdeg::generic_selection_coefficient(load_arrangement(path), point, seed, trials)
              << '\n';
    return kExitOk;
}

int cmd_ab_lift(const std::string& path) {
    std::istringstream in(read_input(path));
    const mdeg::LiftResult lift = mdeg::ardila_boocher_lift(mdeg::parse_matrix(in));
    for (int col : lift.zero_columns) {
        std::cerr << "warning: column " << col << " is zero; lifted to span{e0}\n";
    }
    mdeg::print_arrangement(std::cout, lift.arrangement);
    return kExitOk;
}

int cmd_embed(const std::string& path, std::uint64_t seed) {
    const mdeg::MatroidEmbedding emb = mdeg::embed_in_matroid(load_arrangement(path), seed);
    mdeg::print_matrix(std::cout, emb.vectors);
    for (std::size_t i = 0; i < emb.sigma.size(); ++i) {
        std::cout << "sigma " << i + 1 << ':';
        for (int row : emb.sigma[i]) {
            std::cout << ' ' << row + 1;
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_ingleton(const std::string& path, bool subsets) {
    const mdeg::RankFunction f = load_rankfn(path);
    const auto violations =
        mdeg::ingleton_check(f, subsets ? mdeg::IngletonMode::Subsets
                                        : mdeg::IngletonMode::Elements);
    for (const auto& v : violations) {
        std::cout << v.describe() << '\n';
    }
    if (violations.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    std::cout << "violations: " << violations.size() << '\n';
    return kExitVerdictFail;
}

int cmd_frontier(const std::string& path) {
    const mdeg::Frontier verdict = mdeg::representability_frontier(load_rankfn(path));
    std::cout << mdeg::to_string(verdict) << '\n';
    return verdict == mdeg::Frontier::NecessaryConditionsFail ? kExitVerdictFail : kExitOk;
}

int cmd_flag_degrees(int n, const std::string& format) {
    const mdeg::FlagSupportResult res = mdeg::flag_support(n);
    if (format != "table") {
        mdeg::print_points(std::cout, res.support);
    }
    if (format == "both") {
        std::cout << '\n';
    }
    if (format != "points") {
        for (const auto& [a, d] : res.degrees) {
            for (int v : a) {
                std::cout << v << ' ';
            }
            std::cout << d << '\n';
        }
    }
    return kExitOk;
}

int cmd_flag_verify(int n) {
    const mdeg::FlagSupportResult res = mdeg::flag_support(n);
    std::cout << "support points: " << res.support.points.size() << '\n';
    std::cout << "polytope lattice points: " << res.polytope_points.points.size() << '\n';
    std::cout << "support equals polytope: " << (res.matches_polytope ? "yes" : "no") << '\n';
    return res.matches_polytope ? kExitOk : kExitVerdictFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multidegree supports of subvarieties of products of projective spaces:\n"
                 "polymatroid checks, base-polytope enumeration, subspace arrangements,\n"
                 "and flag-variety Schubert divisor degrees"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string path;
    std::vector<int> dims;
    std::vector<int> point;
    std::uint64_t seed = 0;
    int trials = 3;
    bool subsets = false;
    int flag_n = 0;
    std::string format = "both";

    auto* check_rank = app.add_subcommand("check-rank", "polymatroid/matroid axiom check");
    check_rank->add_option("rankfn", path, "rank function file ('-' for stdin)")->required();

    auto* polytope = app.add_subcommand("polytope", "base-polytope lattice points");
    polytope->add_option("rankfn", path)->required();

    auto* msupp_cmd = app.add_subcommand("msupp", "multidegree support of a class");
    msupp_cmd->add_option("chowclass", path)->required();

    auto* verify = app.add_subcommand("verify-support",
                                      "does the support fill its own polytope?");
    verify->add_option("input", path, "chowclass or points file")->required();

    auto* rank_from = app.add_subcommand("rank-from-arrangement",
                                         "rank function of a subspace arrangement");
    rank_from->add_option("arrangement", path)->required();

    auto* li_class = app.add_subcommand("li-class",
                                        "multiplicity-free class of the image variety");
    li_class->add_option("arrangement", path)->required();
    li_class->add_option("--dims", dims, "target factor dimensions m_1 .. m_n")
        ->required()
        ->expected(-1);

    auto* li_oracle = app.add_subcommand("li-oracle",
                                         "randomized geometric multidegree at a point");
    li_oracle->add_option("arrangement", path)->required();
    li_oracle->add_option("--point", point, "dimension-form exponents a_1 .. a_n")
        ->required()
        ->expected(-1);
    li_oracle->add_option("--seed", seed)->required();
    li_oracle->add_option("--trials", trials)->check(CLI::PositiveNumber);

    auto* ab_lift = app.add_subcommand("ab-lift",
                                       "lift column vectors to a subspace arrangement");
    ab_lift->add_option("matrix", path)->required();

    auto* embed = app.add_subcommand("embed", "embed an arrangement into a linear matroid");
    embed->add_option("arrangement", path)->required();
    embed->add_option("--seed", seed)->required();

    auto* ingleton = app.add_subcommand("ingleton", "scan the ingleton inequality");
    ingleton->add_option("rankfn", path)->required();
    ingleton->add_flag("--subsets", subsets, "scan disjoint subset tuples (n <= 8)");

    auto* frontier = app.add_subcommand("frontier", "linear-representability verdict");
    frontier->add_option("rankfn", path)->required();

    auto* flag_degrees = app.add_subcommand("flag-degrees",
                                            "schubert divisor degrees on the flag variety");
    flag_degrees->add_option("n", flag_n, "flag parameter (V has dimension n+1)")->required();
    flag_degrees->add_option("--format", format)->check(CLI::IsMember({"points", "table"}));

    auto* flag_verify = app.add_subcommand("flag-verify",
                                           "flag support vs. dimension polytope");
    flag_verify->add_option("n", flag_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (check_rank->parsed()) return cmd_check_rank(path);
        if (polytope->parsed()) return cmd_polytope(path);
        if (msupp_cmd->parsed()) return cmd_msupp(path);
        if (verify->parsed()) return cmd_verify_support(path);
        if (rank_from->parsed()) return cmd_rank_from_arrangement(path);
        if (li_class->parsed()) return cmd_li_class(path, dims);
        if (li_oracle->parsed()) return cmd_li_oracle(path, point, seed, trials);
        if (ab_lift->parsed()) return cmd_ab_lift(path);
        if (embed->parsed()) return cmd_embed(path, seed);
        if (ingleton->parsed()) return cmd_ingleton(path, subsets);
        if (frontier->parsed()) return cmd_frontier(path);
        if (flag_degrees->parsed()) return cmd_flag_degrees(flag_n, format);
        if (flag_verify->parsed()) return cmd_flag_verify(flag_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
