#include "gvc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>

#include "gvc/certificate.hpp"
#include "gvc/errors.hpp"
#include "gvc/identities.hpp"
#include "gvc/json_io.hpp"
#include "gvc/kernel.hpp"
#include "gvc/search.hpp"
#include "gvc/text.hpp"
#include "gvc/vanish.hpp"

namespace gvc::cli {

namespace {

struct Options {
    std::string phi_text;
    std::string p_text;
    std::string q_text = "1";
    std::string f_text = "0";
    std::string g_text = "0";
    int m_max = 12;
    int m_verify = 5;
    unsigned r = 1;
    int max_deg_x = 2;
    int max_deg_y = 2;
    std::vector<int> pool = {-1, 0, 1};
    std::uint64_t limit = 0;
    std::uint64_t seed = 0;
    bool json = false;
};

Polynomial parse_in_x(const std::string& text)
{
    static const Ring x_ring({"x"});
    return embed_into(parse_poly(text, x_ring), Ring::xy());
}

Polynomial parse_in_y(const std::string& text)
{
    static const Ring y_ring({"y"});
    return embed_into(parse_poly(text, y_ring), Ring::xy());
}

std::string sample_line(const std::vector<CertificateSample>& samples)
{
    if (samples.empty())
        return "none";
    const bool all = std::all_of(samples.begin(), samples.end(),
                                 [](const CertificateSample& s) { return s.vanished; });
    if (all)
        return "m = " + std::to_string(samples.front().m) + ".."
               + std::to_string(samples.back().m) + " all vanished";
    std::string line;
    for (const auto& s : samples) {
        if (!s.vanished) {
            if (!line.empty())
                line += ", ";
            line += "m = " + std::to_string(s.m) + " witness " + format(*s.witness);
        }
    }
    return "FAILED at " + line;
}

int cmd_check(const Options& opt, std::ostream& out)
{
    const PhiSpec phi = parse_phi(opt.phi_text);
    const Polynomial P = parse_poly(opt.p_text, Ring::xy());
    const Polynomial Q = parse_poly(opt.q_text, Ring::xy());

    const VanishReport hypothesis = check_hypothesis(phi, P, opt.m_max);
    const VanishReport conclusion = check_conclusion(phi, P, Q, opt.m_max);
    const bool ok = hypothesis.all_vanished() && conclusion.empirical_threshold <= opt.m_max;

    if (opt.json) {
        Json j;
        j["command"] = "check";
        j["config"] = {{"phi", opt.phi_text}, {"P", opt.p_text},      {"Q", opt.q_text},
                       {"m_max", opt.m_max},  {"output", "json"},     {"seed", opt.seed}};
        j["hypothesis"] = vanish_report_json(hypothesis);
        j["conclusion"] = vanish_report_json(conclusion);
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        if (hypothesis.all_vanished()) {
            out << "hypothesis: PASS, Lambda^m(P^m) = 0 for m = 1.." << opt.m_max << "\n";
        } else {
            const int m = *hypothesis.first_failure;
            out << "hypothesis: FAIL at m = " << m << ", witness "
                << format(*hypothesis.results.at(m).witness) << "\n";
        }
        if (conclusion.empirical_threshold <= opt.m_max) {
            out << "conclusion: PASS, Lambda^m(P^m*Q) = 0 for m = "
                << conclusion.empirical_threshold << ".." << opt.m_max << "\n";
        } else {
            const int m = opt.m_max;
            out << "conclusion: FAIL, no vanishing tail within m_max; witness at m = " << m
                << ": " << format(*conclusion.results.at(m).witness) << "\n";
        }
    }
    return ok ? exit_ok : exit_falsified;
}

int cmd_certify(const Options& opt, std::ostream& out)
{
    const PhiSpec phi = parse_phi(opt.phi_text);
    const Polynomial P = parse_poly(opt.p_text, Ring::xy());
    const Polynomial Q = parse_poly(opt.q_text, Ring::xy());

    const GvcCertificate cert = certify(phi, P, Q, opt.m_verify);

    if (opt.json) {
        Json j;
        j["command"] = "certify";
        j["config"] = {{"phi", opt.phi_text},     {"P", opt.p_text},  {"Q", opt.q_text},
                       {"m_verify", opt.m_verify}, {"output", "json"}, {"seed", opt.seed}};
        j["certificate"] = certificate_json(cert);
        j["ok"] = cert.all_samples_vanished();
        out << j.dump(2) << "\n";
    } else {
        out << "phi = " << format(cert.phi) << "\n";
        if (cert.c)
            out << "c = " << format_rational(*cert.c) << "\n";
        out << "phi_normalized = " << format(cert.phi_normalized) << "\n";
        if (cert.a1)
            out << "a1 = " << format_rational(*cert.a1) << "\n";
        if (cert.g)
            out << "g = " << format(*cert.g) << "\n";
        if (cert.d)
            out << "d = " << *cert.d << "\n";
        if (cert.r)
            out << "r = " << *cert.r << "\n";
        else
            out << "r = infinity (phi_normalized = 0)\n";
        out << "m_star = " << cert.m_star << "\n";
        out << "samples: " << sample_line(cert.samples) << "\n";
    }
    return cert.all_samples_vanished() ? exit_ok : exit_falsified;
}

int cmd_kernel(const Options& opt, std::ostream& out)
{
    const PhiSpec phi = parse_phi(opt.phi_text);
    const Polynomial P = kernel_element(phi, parse_in_x(opt.f_text), parse_in_y(opt.g_text));
    if (opt.json) {
        Json j;
        j["command"] = "kernel";
        j["config"] = {{"phi", opt.phi_text}, {"f", opt.f_text}, {"g", opt.g_text},
                       {"output", "json"},    {"seed", opt.seed}};
        j["P"] = format(P);
        out << j.dump(2) << "\n";
    } else {
        out << format(P) << "\n";
    }
    return exit_ok;
}

int cmd_classify(const Options& opt, std::ostream& out)
{
    const PhiSpec phi = parse_phi(opt.phi_text);
    const Polynomial P = parse_poly(opt.p_text, Ring::xy());
    const KernelDecomposition dec = classify_kernel(phi, P);
    if (opt.json) {
        Json j;
        j["command"] = "classify";
        j["config"] = {{"phi", opt.phi_text}, {"P", opt.p_text}, {"output", "json"},
                       {"seed", opt.seed}};
        j["f"] = format(dec.f);
        j["g"] = format(dec.g);
        out << j.dump(2) << "\n";
    } else {
        out << "f = " << format(dec.f) << "\n";
        out << "g = " << format(dec.g) << "\n";
    }
    return exit_ok;
}

int cmd_oracle_eq1(const Options& opt, std::ostream& out)
{
    const PhiSpec phi = parse_phi(opt.phi_text);
    const Eq1Report report = eq1_residual(phi, parse_in_x(opt.f_text), parse_in_y(opt.g_text));
    if (opt.json) {
        Json j;
        j["command"] = "oracle.eq1";
        j["config"] = {{"phi", opt.phi_text}, {"f", opt.f_text}, {"g", opt.g_text},
                       {"output", "json"},    {"seed", opt.seed}};
        j["result"] = eq1_report_json(report);
        out << j.dump(2) << "\n";
    } else {
        out << "direct = " << format(report.direct) << "\n";
        out << "transcribed = " << format(report.transcribed) << "\n";
        out << "residual = " << format(report.residual) << "\n";
    }
    return exit_ok;
}

int cmd_oracle_eq2(const Options& opt, std::ostream& out)
{
    const Int value = eq2_value(opt.r);
    if (opt.json) {
        Json j;
        j["command"] = "oracle.eq2";
        j["config"] = {{"r", opt.r}, {"output", "json"}, {"seed", opt.seed}};
        j["value"] = value.str();
        out << j.dump(2) << "\n";
    } else {
        out << value.str() << "\n";
    }
    return exit_ok;
}

int cmd_search(const Options& opt, std::ostream& out)
{
    const PhiSpec phi = parse_phi(opt.phi_text);
    SearchOptions options;
    options.max_deg_x = opt.max_deg_x;
    options.max_deg_y = opt.max_deg_y;
    options.coeff_pool = opt.pool;
    options.m_max = opt.m_max;
    options.max_candidates = opt.limit;
    options.seed = opt.seed;

    const SearchResult result = counterexample_search(phi, options);

    if (opt.json) {
        Json j;
        j["command"] = "search";
        j["config"] = {{"phi", opt.phi_text},
                       {"max_deg_x", opt.max_deg_x},
                       {"max_deg_y", opt.max_deg_y},
                       {"pool", opt.pool},
                       {"m_max", opt.m_max},
                       {"limit", opt.limit},
                       {"output", "json"},
                       {"seed", opt.seed}};
        j["result"] = search_result_json(result);
        out << j.dump(2) << "\n";
    } else {
        out << "candidates = " << result.candidates
            << (result.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
        out << "hypothesis survivors = " << result.hypothesis_survivors << "\n";
        out << "failures = " << result.failures.size() << "\n";
        for (const auto& f : result.failures)
            out << "  P = " << format(f.P) << ", Q = " << format(f.Q) << ", m = " << f.failing_m
                << "\n";
    }
    return result.failures.empty() ? exit_ok : exit_falsified;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    Options opt;
    const char* env_output = std::getenv("GVC_OUTPUT");
    if (env_output != nullptr && std::string(env_output) == "json")
        opt.json = true;

    CLI::App app{"exact vanishing checks for the operator Lambda = (Dx - Phi(Dy))*Dy"};
    app.require_subcommand(1);

    auto add_json = [&opt](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "emit JSON instead of text");
        cmd->add_option("--seed", opt.seed, "seed for randomized behavior (echoed in output)");
    };

    auto* check = app.add_subcommand(
        "check", "test Lambda^m(P^m) = 0 and Lambda^m(P^m*Q) = 0 for m = 1..m-max");
    check->add_option("--phi", opt.phi_text, "Phi as a polynomial in t")->required();
    check->add_option("--P", opt.p_text, "P as a polynomial in x, y")->required();
    check->add_option("--Q", opt.q_text, "Q as a polynomial in x, y (default 1)");
    check->add_option("--m-max", opt.m_max, "largest m to check (default 12)");
    add_json(check);

    auto* certify_cmd =
        app.add_subcommand("certify", "derive the vanishing threshold m_star for (phi, P, Q)");
    certify_cmd->add_option("--phi", opt.phi_text, "Phi as a polynomial in t")->required();
    certify_cmd->add_option("--P", opt.p_text, "P as a polynomial in x, y")->required();
    certify_cmd->add_option("--Q", opt.q_text, "Q as a polynomial in x, y (default 1)");
    certify_cmd->add_option("--m-verify", opt.m_verify,
                            "number of extra samples above m_star (default 5)");
    add_json(certify_cmd);

    auto* kernel_cmd =
        app.add_subcommand("kernel", "construct the kernel element e^{x*Phi(Dy)}(f + g)");
    kernel_cmd->add_option("--phi", opt.phi_text, "Phi as a polynomial in t")->required();
    kernel_cmd->add_option("--f", opt.f_text, "f as a polynomial in x (default 0)");
    kernel_cmd->add_option("--g", opt.g_text, "g as a polynomial in y (default 0)");
    add_json(kernel_cmd);

    auto* classify_cmd =
        app.add_subcommand("classify", "split a kernel element as e^{x*Phi(Dy)}(f + g)");
    classify_cmd->add_option("--phi", opt.phi_text, "Phi as a polynomial in t")->required();
    classify_cmd->add_option("--P", opt.p_text, "P as a polynomial in x, y")->required();
    add_json(classify_cmd);

    auto* oracle = app.add_subcommand("oracle", "independent identity evaluators");
    oracle->require_subcommand(1);
    auto* eq1 = oracle->add_subcommand(
        "eq1", "x = 0 slice of Lambda^2(P^2) for P = e^{x*Phi(Dy)}(f + g), two routes");
    eq1->add_option("--phi", opt.phi_text, "Phi as a polynomial in t")->required();
    eq1->add_option("--f", opt.f_text, "f as a polynomial in x, zero constant term (default 0)");
    eq1->add_option("--g", opt.g_text, "g as a polynomial in y (default 0)");
    add_json(eq1);
    auto* eq2 = oracle->add_subcommand("eq2", "(4r)! r! r! - 6 (3r)! (2r)! r! + 6 ((2r)!)^3");
    eq2->add_option("--r", opt.r, "parameter r >= 1")->required()->check(CLI::PositiveNumber);
    add_json(eq2);

    auto* search_cmd = app.add_subcommand(
        "search", "sweep small P for conclusion failures beyond the threshold b + a*o(Phi)");
    search_cmd->add_option("--phi", opt.phi_text, "Phi as a polynomial in t")->required();
    search_cmd->add_option("--max-deg-x", opt.max_deg_x, "largest x exponent in P (default 2)");
    search_cmd->add_option("--max-deg-y", opt.max_deg_y, "largest y exponent in P (default 2)");
    search_cmd->add_option("--pool", opt.pool, "comma-separated coefficient pool (default -1,0,1)")
        ->delimiter(',');
    search_cmd->add_option("--m-max", opt.m_max, "largest m to check (default 6)");
    search_cmd->add_option("--limit", opt.limit,
                           "sample this many candidates instead of sweeping (0 = exhaustive)");
    add_json(search_cmd);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    if (opt.m_max < 1 || opt.m_verify < 0) {
        err << "error: m-max must be >= 1 and m-verify >= 0\n";
        return exit_input_error;
    }

    // search defaults to a shallower sweep than the report commands
    if (search_cmd->parsed() && !search_cmd->count("--m-max"))
        opt.m_max = 6;

    try {
        if (check->parsed())
            return cmd_check(opt, out);
        if (certify_cmd->parsed())
            return cmd_certify(opt, out);
        if (kernel_cmd->parsed())
            return cmd_kernel(opt, out);
        if (classify_cmd->parsed())
            return cmd_classify(opt, out);
        if (oracle->parsed() && eq1->parsed())
            return cmd_oracle_eq1(opt, out);
        if (oracle->parsed() && eq2->parsed())
            return cmd_oracle_eq2(opt, out);
        if (search_cmd->parsed())
            return cmd_search(opt, out);
        err << "error: no command\n";
        return exit_input_error;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const UnknownVariableError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const HypothesisViolatedError& e) {
        err << "error: " << e.what() << "\n";
        return exit_falsified;
    } catch (const Error& e) {
        // engine precondition / form / kernel-membership failures
        err << "error: " << e.what() << "\n";
        return exit_engine_error;
    }
}

} // namespace gvc::cli
