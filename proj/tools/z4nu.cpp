// Command-line front end: analyze, census, classify-theta, parse.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "z4nu/z4nu.hpp"

namespace {

enum Exit { kOk = 0, kChain = 2, kLimit = 3, kInput = 4, kInvariant = 5 };

std::vector<z4nu::Theta> parse_theta_list(const std::string& text) {
    if (text == "all") return {z4nu::Theta::all().begin(), z4nu::Theta::all().end()};
    std::vector<z4nu::Theta> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(z4nu::Theta::make(z4nu::parse_ring_element(item)));
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw z4nu::ValidationError("range must look like A..B, got '" + text + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw z4nu::ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic codes over Z4 + vZ4 with v^2 = theta"};
    app.require_subcommand(1);

    std::string file, format = "text";
    bool oracle = false, strict = false;
    std::uint64_t limit = z4nu::kDefaultOracleLimit;
    auto* analyze = app.add_subcommand("analyze", "unique form, relations, rank and cardinality of a code");
    analyze->add_option("file", file, "spec file (JSON)")->required();
    analyze->add_flag("--oracle", oracle, "also enumerate the code and cross-check");
    analyze->add_option("--limit", limit, "largest code the oracle will enumerate");
    analyze->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    analyze->add_flag("--strict", strict, "exit 5 when any finding is reported");

    std::string n_range = "1..4", theta_list = "all", census_format = "text";
    int samples = 50;
    std::uint64_t seed = 1;
    auto* census = app.add_subcommand("census", "random codes checked against the oracle");
    census->add_option("--n", n_range, "length range A..B");
    census->add_option("--theta", theta_list, "'all' or a comma-separated list");
    census->add_option("--samples", samples, "codes per (n, theta)");
    census->add_option("--seed", seed, "base seed");
    census->add_option("--limit", limit, "largest code the oracle will enumerate");
    census->add_option("--format", census_format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

    std::string expr;
    auto* classify = app.add_subcommand("classify-theta", "chain or non-chain for v^2 = expr");
    classify->add_option("expr", expr, "ring element, e.g. 2+3v")->required();

    std::string poly_text, theta_text = "0";
    int n = 1;
    auto* parse = app.add_subcommand("parse", "parse a polynomial and print its coefficients");
    parse->add_option("expr", poly_text, "polynomial expression")->required();
    parse->add_option("--n", n, "length")->required();
    parse->add_option("--theta", theta_text, "value of v^2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const z4nu::CodeSpec spec = z4nu::spec_from_string(read_file(file));
            const auto report = z4nu::analyze(spec, {oracle, limit});
            std::cout << (format == "machine" ? z4nu::report_to_machine(report) : z4nu::report_to_text(report));
            if (!report.invariant_violations.empty()) {
                std::cerr << "invariant violation: " << report.invariant_violations.front() << "\n";
                return kInvariant;
            }
            if (strict && !report.findings.empty()) {
                std::cerr << "finding: " << report.findings.front() << "\n";
                return kInvariant;
            }
        } else if (*census) {
            z4nu::CensusOptions opt;
            std::tie(opt.n_min, opt.n_max) = parse_range(n_range);
            opt.thetas = parse_theta_list(theta_list);
            opt.samples = samples;
            opt.seed = seed;
            opt.limit = limit;
            const auto rows = z4nu::run_census(opt);
            if (census_format == "machine") std::cout << z4nu::census_to_json(rows).dump(2) << "\n";
            else std::cout << z4nu::census_to_text(rows);
        } else if (*classify) {
            const z4nu::RElem x = z4nu::parse_ring_element(expr);
            const bool chain = z4nu::classify(x) == z4nu::RingClass::chain;
            std::cout << z4nu::to_string(x) << ": " << (chain ? "chain" : "non-chain") << "\n";
            if (!chain) std::cout << "k = " << z4nu::to_string(z4nu::Theta::make(x).k()) << "\n";
            return chain ? kChain : kOk;
        } else if (*parse) {
            const z4nu::Theta theta = z4nu::Theta::make(z4nu::parse_ring_element(theta_text));
            if (n < 1) throw z4nu::ValidationError("n must be at least 1");
            const z4nu::PolyR f = z4nu::parse_poly(poly_text, n, theta);
            std::cout << z4nu::to_string(f) << "\n" << z4nu::poly_json(f).dump() << "\n";
        }
    } catch (const z4nu::ChainRingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kChain;
    } catch (const z4nu::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLimit;
    } catch (const z4nu::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const z4nu::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const z4nu::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const z4nu::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kOk;
}
