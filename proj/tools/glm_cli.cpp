// glm: build GLM categories from a Jordan symbol or a Gram matrix, verify
// them, and print their equivariant modular data.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "glm/equivar.hpp"
#include "glm/lattice.hpp"
#include "render.hpp"

using nlohmann::json;
using namespace glm;

namespace {

struct RunConfig {
    std::string jordan, gram;
    std::string epsilon = "+1";
    std::string alpha_branch = "principal";
    std::string beta_sign = "pseudo-unitary";
    std::string format = "table";
    bool paper_order = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    std::string description;
    std::optional<Lattice> lattice;
    CocycleData data;
    int epsilon = 1;
    Branch branch = Branch::principal;
    BetaChoice beta = BetaChoice::pseudo_unitary;
};

std::string root_str(Root r) { return render::symbol(Cyclotomic(r)); }

Loaded load(const RunConfig& cfg) {
    Loaded in;
    if (cfg.jordan.empty() == cfg.gram.empty()) throw InputError("give exactly one of --jordan and --gram");
    if (cfg.epsilon == "+1" || cfg.epsilon == "1") in.epsilon = 1;
    else if (cfg.epsilon == "-1") in.epsilon = -1;
    else throw InputError("--epsilon must be +1 or -1");
    in.branch = cfg.alpha_branch == "negative" ? Branch::negative : Branch::principal;
    in.beta = cfg.beta_sign == "negative" ? BetaChoice::negative : BetaChoice::pseudo_unitary;
    try {
        if (!cfg.jordan.empty()) {
            auto form = parse_jordan(cfg.jordan);
            in.description = "jordan " + form.str();
            in.data = build(form);
        } else {
            Lattice l = std::filesystem::exists(cfg.gram) ? read_gram_file(cfg.gram) : parse_gram(cfg.gram);
            in.lattice = l;
            std::ostringstream os;
            os << "gram [";
            for (std::size_t i = 0; i < l.gram.size(); ++i) {
                os << (i ? ",[" : "[");
                for (std::size_t j = 0; j < l.gram[i].size(); ++j) os << (j ? "," : "") << l.gram[i][j];
                os << "]";
            }
            os << "]";
            in.description = os.str();
            in.data = build_cocycle_from_lattice(l);
        }
    } catch (const ParseError& e) {
        throw InputError(std::string("parse error ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return in;
}

std::string element_str(const CocycleData& d, int a) { return d.group().element(a).str(); }

json header(const Loaded& in, const GLMCategory& cat) {
    return {{"input", in.description},
            {"epsilon", in.epsilon},
            {"alpha", render::to_json(Cyclotomic(cat.alpha()))},
            {"beta", render::to_json(Cyclotomic(cat.beta()))},
            {"delta", element_str(in.data, in.data.delta())}};
}

void print_header(const Loaded& in, const GLMCategory& cat) {
    std::cout << "input    " << in.description << "\n"
              << "epsilon  " << (in.epsilon > 0 ? "+1" : "-1") << "\n"
              << "alpha    " << root_str(cat.alpha()) << "\n"
              << "beta     " << root_str(cat.beta()) << "\n"
              << "delta    " << element_str(in.data, in.data.delta()) << "\n";
}

int cmd_check(const RunConfig& cfg) {
    Loaded in = load(cfg);
    auto cocycle = verify_cocycle(in.data);
    GLMCategory cat = make_category(in.data, in.epsilon, in.branch, in.beta);
    CoherenceReport rep = verify_all(cat);
    std::optional<MilgramReport> milgram;
    if (in.lattice) milgram = verify_milgram(*in.lattice);
    bool ok = cocycle.ok() && rep.ok() && (!milgram || milgram->ok());

    if (cfg.format == "json") {
        json out = header(in, cat);
        json cj = {{"ok", cocycle.ok()}, {"checked", cocycle.checked}};
        if (cocycle.failure) cj["failure"] = {{"property", cocycle.failure->property}, {"witness", cocycle.failure->witness}};
        out["cocycle"] = cj;
        json checks = json::object();
        for (const auto& f : rep.families) checks[f.family] = f.ok() ? "pass" : "fail";
        out["checks"] = checks;
        out["coherence"] = render::to_json(rep);
        if (milgram)
            out["milgram"] = {{"full_sum", milgram->full_sum_ok ? "pass" : "fail"},
                              {"partial_sum", milgram->partial_sum_ok ? "pass" : "fail"},
                              {"signature", milgram->signature}};
        out["ok"] = ok;
        std::cout << out.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    print_header(in, cat);
    if (in.lattice && in.data.delta() != 0)
        std::cout << "note     delta is nonzero: " << element_str(in.data, in.data.delta()) << "\n";
    std::cout << "\n" << (cocycle.ok() ? "pass" : "FAIL") << "  cocycle (" << cocycle.checked.size()
              << " properties)\n";
    if (cocycle.failure)
        std::cout << "      " << cocycle.failure->property << " at " << cocycle.failure->witness << "\n";
    for (const auto& f : rep.families) {
        std::cout << (f.ok() ? "pass" : "FAIL") << "  " << std::left << std::setw(40) << f.family << " "
                  << f.instances_checked << " instances\n";
        for (const auto& x : f.failures)
            std::cout << "      " << x.objects << " [" << x.basis << "]: " << x.lhs << " != " << x.rhs << "\n";
    }
    if (milgram)
        std::cout << (milgram->ok() ? "pass" : "FAIL") << "  Milgram sums (signature " << milgram->signature
                  << ")\n";
    std::cout << "\n" << (ok ? "all checks pass" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

json matrix_json(const CycMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(render::to_json(x));
        out.push_back(r);
    }
    return out;
}

json vector_json(const std::vector<Cyclotomic>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(render::to_json(x));
    return out;
}

// Display width of UTF-8 text.
std::size_t width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad_left(const std::string& s, std::size_t w) { return std::string(w > width(s) ? w - width(s) : 0, ' ') + s; }
std::string pad_right(const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); }

void print_matrix(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& cells) {
    std::size_t w = 0;
    for (const auto& l : labels) w = std::max(w, width(l));
    for (const auto& row : cells)
        for (const auto& c : row) w = std::max(w, width(c));
    w += 1;
    std::cout << pad_left("", w);
    for (const auto& l : labels) std::cout << pad_left(l, w);
    std::cout << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::cout << pad_left(labels[i], w);
        for (const auto& c : cells[i]) std::cout << pad_left(c, w);
        std::cout << "\n";
    }
}

int cmd_modular_data(const RunConfig& cfg) {
    Loaded in = load(cfg);
    GLMCategory cat = make_category(in.data, in.epsilon, in.branch, in.beta);
    CoherenceReport rep = verify_all(cat);
    ModularData md;
    try {
        md = modular_data(cat);
    } catch (const SMatrixMismatch& e) {
        std::cerr << "S matrix inconsistency: " << e.what() << "\n";
        return 1;
    }
    if (cfg.paper_order) md = permuted(md, paper_order(md));
    auto mrep = verify_modular(md, in.beta == BetaChoice::pseudo_unitary);
    bool ok = rep.ok() && mrep.ok();

    if (cfg.format == "json") {
        json out = header(in, cat);
        out["objects"] = md.labels;
        out["T"] = vector_json(md.T);
        out["S"] = matrix_json(md.S);
        out["dims"] = vector_json(md.dims);
        out["global_dim"] = render::to_json(md.global_dim);
        json checks = json::object();
        for (const auto& f : rep.families) checks[f.family] = f.ok() ? "pass" : "fail";
        for (const auto& c : mrep.checks) checks["modular " + c.name] = c.ok ? "pass" : "fail";
        out["checks"] = checks;
        std::cout << out.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    print_header(in, cat);
    int n = md.size();
    std::cout << "\nobjects (" << n << ")\n";
    for (int i = 0; i < n; ++i)
        std::cout << "  " << pad_right(md.labels[i], 12) << " T = " << pad_right(render::symbol(md.T[i]), 14)
                  << " dim = " << pad_right(render::symbol(md.dims[i]), 10) << " ~ " << render::approx(md.dims[i])
                  << "\n";
    std::cout << "global dim " << render::symbol(md.global_dim) << "\n\nS\n";
    std::vector<std::vector<std::string>> exact(n), approx(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            exact[i].push_back(render::symbol(md.S[i][j]));
            approx[i].push_back(render::approx(md.S[i][j], 4));
        }
    print_matrix(md.labels, exact);
    std::cout << "\nS (approx)\n";
    print_matrix(md.labels, approx);
    std::cout << "\n";
    for (const auto& c : mrep.checks)
        std::cout << (c.ok ? "pass" : "FAIL") << "  " << c.name << (c.ok ? "" : ": " + c.detail) << "\n";
    for (const auto& f : rep.families)
        if (!f.ok()) std::cout << "FAIL  " << f.family << "\n";
    std::cout << (rep.ok() ? "pass" : "FAIL") << "  coherence (" << rep.families.size() << " families)\n";
    return ok ? 0 : 1;
}

int cmd_fusion(const RunConfig& cfg) {
    Loaded in = load(cfg);
    GLMCategory cat = make_category(in.data, in.epsilon, in.branch, in.beta);
    auto objs = simple_objects(cat);
    json rules = json::array();
    for (const auto& a : objs)
        for (const auto& b : objs) {
            std::vector<std::string> out;
            for (const auto& c : eq_fusion(cat, a, b)) out.push_back(eq_label(cat, c));
            if (cfg.format == "json") {
                rules.push_back({{"left", eq_label(cat, a)}, {"right", eq_label(cat, b)}, {"result", out}});
            } else {
                std::cout << eq_label(cat, a) << " x " << eq_label(cat, b) << " =";
                for (std::size_t i = 0; i < out.size(); ++i) std::cout << (i ? " + " : " ") << out[i];
                std::cout << "\n";
            }
        }
    if (cfg.format == "json") {
        json labels = json::array();
        for (const auto& o : objs) labels.push_back(eq_label(cat, o));
        std::cout << json{{"input", in.description}, {"objects", labels}, {"fusion", rules}}.dump(2) << "\n";
    }
    return 0;
}

int cmd_gauss(const RunConfig& cfg) {
    Loaded in = load(cfg);
    const auto& g = in.data.group();
    Cyclotomic gq = gauss_partial_q(in.data);
    Cyclotomic full = gauss_full(in.data.form());
    int sig = signature(in.data.form());
    std::vector<std::pair<std::string, Cyclotomic>> partial;
    for (int z = 0; z < g.num_cosets(); ++z)
        partial.emplace_back(g.element(g.coset_rep(z)).str(), gauss_partial_Q(in.data, z));
    if (cfg.format == "json") {
        json pj = json::object();
        for (const auto& [z, v] : partial) pj[z] = render::to_json(v);
        json out = {{"input", in.description},
                    {"delta", element_str(in.data, in.data.delta())},
                    {"G_delta_q_inv", render::to_json(gq)},
                    {"G_delta_plus_z_Q", pj},
                    {"milgram_sum", render::to_json(full)},
                    {"signature", sig}};
        if (in.lattice) out["lattice_signature_mod8"] = signature_lattice(*in.lattice).mod8();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "input            " << in.description << "\n"
              << "delta            " << element_str(in.data, in.data.delta()) << "\n"
              << "G_delta(q^-1)    " << render::symbol(gq) << "\n";
    for (const auto& [z, v] : partial) std::cout << "G_delta+" << std::left << std::setw(9) << z << render::symbol(v) << "\n";
    std::cout << "Milgram sum      " << render::symbol(full) << "\n"
              << "signature        " << sig << "\n";
    if (in.lattice) std::cout << "lattice p+ - p-  " << signature_lattice(*in.lattice).mod8() << " (mod 8)\n";
    return 0;
}

int cmd_info(const RunConfig& cfg) {
    Loaded in = load(cfg);
    GLMCategory cat = make_category(in.data, in.epsilon, in.branch, in.beta);
    const auto& g = in.data.group();
    std::vector<std::string> t2;
    for (int a : g.torsion2()) t2.push_back(g.element(a).str());
    std::vector<int> orders = g.orders();
    if (cfg.format == "json") {
        json out = header(in, cat);
        out["group_orders"] = orders;
        out["order"] = g.order();
        out["two_gamma_order"] = g.two_gamma().size();
        out["torsion2"] = t2;
        out["num_cosets"] = g.num_cosets();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "group    Z_" << (orders.empty() ? 1 : orders[0]);
    for (std::size_t i = 1; i < orders.size(); ++i) std::cout << " x Z_" << orders[i];
    std::cout << "  (order " << g.order() << ")\n"
              << "|2G|     " << g.two_gamma().size() << "\n"
              << "G_2      {";
    for (std::size_t i = 0; i < t2.size(); ++i) std::cout << (i ? ", " : "") << t2[i];
    std::cout << "}\n"
              << "G/2G     " << g.num_cosets() << " cosets\n";
    print_header(in, cat);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braided Z2-crossed categories GLM(G, sigma, omega, delta, eps | q, alpha, beta)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        auto* j = sub->add_option("--jordan", cfg.jordan, "Jordan symbol, e.g. \"4_1^+1 + 3^-1\"");
        auto* g = sub->add_option("--gram", cfg.gram, "Gram matrix file (rank, then entries) or inline text");
        j->excludes(g);
        sub->add_option("--epsilon", cfg.epsilon, "+1 or -1")->capture_default_str();
        sub->add_option("--alpha-branch", cfg.alpha_branch)
            ->check(CLI::IsMember({"principal", "negative"}))
            ->capture_default_str();
        sub->add_option("--beta-sign", cfg.beta_sign)
            ->check(CLI::IsMember({"pseudo-unitary", "negative"}))
            ->capture_default_str();
        sub->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    };

    auto* check = app.add_subcommand("check", "verify the cocycle and every coherence axiom");
    auto* md = app.add_subcommand("modular-data", "S and T matrices of the equivariantisation");
    auto* fusion = app.add_subcommand("fusion", "fusion rules of the equivariantisation");
    auto* gauss = app.add_subcommand("gauss", "Gauss sums and signature");
    auto* info = app.add_subcommand("info", "group structure and category parameters");
    for (auto* s : {check, md, fusion, gauss, info}) add_common(s);
    md->add_flag("--paper-order", cfg.paper_order, "list objects in the reference order of the 4_1 fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(cfg);
        if (md->parsed()) return cmd_modular_data(cfg);
        if (fusion->parsed()) return cmd_fusion(cfg);
        if (gauss->parsed()) return cmd_gauss(cfg);
        if (info->parsed()) return cmd_info(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
