#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ola/annihilator.hpp"
#include "ola/coxeter.hpp"
#include "ola/mult.hpp"
#include "ola/order.hpp"
#include "ola/partition.hpp"
#include "ola/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace ola;

namespace {

std::string int_str(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

json weights_json(const std::vector<Weight>& ws) {
    json arr = json::array();
    for (const Weight& w : ws) arr.push_back(to_string(w));
    return arr;
}

json table_json(const MultTable& t) {
    json obj = json::object();
    for (const auto& [w, m] : t.entries) obj[to_string(w)] = int_str(m);
    return obj;
}

// Finite windowed weight: factors separated by ';', entries by ','.
FiniteWeight parse_finite(const std::string& text) {
    FiniteWeight out;
    std::istringstream in(text);
    std::string factor;
    while (std::getline(in, factor, ';')) {
        std::vector<long long> entries;
        std::istringstream fin(factor);
        std::string item;
        while (std::getline(fin, item, ',')) {
            try {
                entries.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw parse_error("bad windowed entry '" + item + "'");
            }
        }
        out.push_back(std::move(entries));
    }
    if (out.empty()) out.push_back({});
    return out;
}

CompositionVector parse_content(const std::string& text) {
    CompositionVector out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw parse_error("bad content entry '" + item + "'");
        }
    }
    return out;
}

std::vector<Rat> parse_rationals(const std::string& text) {
    std::vector<Rat> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    return out;
}

json diagnostics() {
    json d = json::object();
    d["kostka_cache_entries"] = kostka_cache_size();
    d["max_kl_window"] = max_kl_window();
    return d;
}

void emit(json result) {
    result["diagnostics"] = diagnostics();
    std::cout << result.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorial invariants of the finitary categories O"};
    app.require_subcommand(1);

    int max_window = 0;
    long long cache_limit = 0;
    app.add_option("--max-window", max_window,
                   "Override OLA_MAX_WINDOW for this invocation");
    app.add_option("--cache-limit", cache_limit,
                   "Override OLA_CACHE_LIMIT for this invocation");

    std::string flavor_s, lam_s, mu_s, nu_s, gamma_s, w_s, x_s, content_s,
        part_s, a_s, yl_s = "[]", yr_s = "[]";
    long long k = 0, label_x = 0, max_depth = -1;
    int window = 0, widen = 0, pad = 0;
    bool want_cert = false;

    auto add_flavor = [&](CLI::App* cmd) {
        cmd->add_option("--flavor", flavor_s, "sl, o, or sp")->required();
    };

    auto* c_kostka = app.add_subcommand("kostka", "Kostka number K(mu,content)");
    c_kostka->add_option("--mu", part_s, "partition, e.g. [2,1]")->required();
    c_kostka->add_option("--content", content_s, "comma separated")->required();

    auto* c_ccoeff = app.add_subcommand("c-coeff", "layer-k weight multiplicity");
    add_flavor(c_ccoeff);
    c_ccoeff->add_option("--k", k)->required();
    c_ccoeff->add_option("--gamma", gamma_s)->required();

    auto* c_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial");
    c_kl->add_option("--x", x_s, "permutation, e.g. [2,1,3]")->required();
    c_kl->add_option("--w", w_s)->required();

    auto* c_verma = app.add_subcommand("verma", "windowed Verma multiplicity");
    c_verma->add_option("--lam", lam_s, "factors ';', entries ','")->required();
    c_verma->add_option("--mu", mu_s)->required();

    auto* c_stable = app.add_subcommand("stable-mult", "stable multiplicity");
    add_flavor(c_stable);
    c_stable->add_option("--lam", lam_s);
    c_stable->add_option("--mu", mu_s);
    c_stable->add_option("--pad", pad, "extra window padding");

    auto* c_std = app.add_subcommand("standard-mult",
                                     "standard-object multiplicity");
    add_flavor(c_std);
    c_std->add_option("--lam", lam_s);
    c_std->add_option("--nu", nu_s);

    auto* c_inj = app.add_subcommand("inj-filtration",
                                     "standard filtration of the injective");
    add_flavor(c_inj);
    c_inj->add_option("--mu", mu_s);

    auto* c_layer = app.add_subcommand("layer", "canonical filtration layer");
    add_flavor(c_layer);
    c_layer->add_option("--lam", lam_s);
    c_layer->add_option("--k", k)->required();
    c_layer->add_option("--window", window, "support window, 0 = default");

    auto* c_leqfin = app.add_subcommand("leq-fin", "finite-root order test");
    add_flavor(c_leqfin);
    c_leqfin->add_option("--mu", mu_s);
    c_leqfin->add_option("--lam", lam_s);

    auto* c_finup = app.add_subcommand("fin-up-set", "finite up-set of mu");
    add_flavor(c_finup);
    c_finup->add_option("--mu", mu_s);

    auto* c_leqinf = app.add_subcommand("leq-inf", "category order test");
    add_flavor(c_leqinf);
    c_leqinf->add_option("--mu", mu_s);
    c_leqinf->add_option("--lam", lam_s);
    c_leqinf->add_option("--max-depth", max_depth, "-1 = degree gap");
    c_leqinf->add_option("--widen", widen);
    c_leqinf->add_flag("--cert", want_cert, "emit a witness chain");

    auto* c_interval = app.add_subcommand("interval", "order interval");
    add_flavor(c_interval);
    c_interval->add_option("--mu", mu_s);
    c_interval->add_option("--lam", lam_s);
    c_interval->add_option("--widen", widen);

    auto* c_block = app.add_subcommand("block", "block label");
    add_flavor(c_block);
    c_block->add_option("--w", w_s);

    auto* c_degree = app.add_subcommand("degree", "degree of a weight");
    add_flavor(c_degree);
    c_degree->add_option("--w", w_s);

    auto* c_dom = app.add_subcommand("dominant", "b-dominance test");
    add_flavor(c_dom);
    c_dom->add_option("--w", w_s);

    auto* c_ann = app.add_subcommand("annihilator",
                                     "label of an integrable simple");
    add_flavor(c_ann);
    c_ann->add_option("--lam", lam_s);

    auto* c_wfl = app.add_subcommand("weight-from-label",
                                     "weight realizing a primitive-ideal label");
    c_wfl->add_option("--x", label_x)->required();
    c_wfl->add_option("--yl", yl_s, "partition");
    c_wfl->add_option("--yr", yr_s, "partition");
    c_wfl->add_option("--a", a_s, "comma separated rationals, x of them");

    auto* c_self = app.add_subcommand("selftest", "oracle agreement suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (max_window > 0)
            setenv("OLA_MAX_WINDOW", std::to_string(max_window).c_str(), 1);
        if (cache_limit > 0)
            set_kostka_cache_limit(static_cast<std::size_t>(cache_limit));

        auto flavor = [&]() { return flavor_from_string(flavor_s); };

        if (c_kostka->parsed()) {
            emit({{"value",
                   int_str(kostka(parse_partition(part_s),
                                  parse_content(content_s)))}});
        } else if (c_ccoeff->parsed()) {
            emit({{"value", int_str(c_coeff(flavor(), k,
                                            parse_weight(flavor(), gamma_s)))}});
        } else if (c_kl->parsed()) {
            Permutation x = parse_permutation(x_s), w = parse_permutation(w_s);
            if (x.size() != w.size())
                throw precondition_error("kl: permutations differ in size");
            KLContext ctx(static_cast<int>(w.size()));
            const KLPolynomial& p = ctx.kl_poly(x, w);
            json coeffs = json::array();
            for (const Int& c : p.coeffs) coeffs.push_back(int_str(c));
            emit({{"coeffs", coeffs}, {"text", to_string(p)}});
        } else if (c_verma->parsed()) {
            emit({{"value", int_str(finite_verma_mult(parse_finite(lam_s),
                                                      parse_finite(mu_s)))}});
        } else if (c_stable->parsed()) {
            emit({{"value", int_str(stable_mult(parse_weight(flavor(), lam_s),
                                                parse_weight(flavor(), mu_s),
                                                pad))}});
        } else if (c_std->parsed()) {
            emit({{"value", int_str(standard_mult(parse_weight(flavor(), lam_s),
                                                  parse_weight(flavor(), nu_s)))}});
        } else if (c_inj->parsed()) {
            MultTable t = injective_filtration(parse_weight(flavor(), mu_s));
            bool injective_standard =
                t.entries.size() == 1 && t.entries.begin()->first == t.base;
            emit({{"base", to_string(t.base)},
                  {"table", table_json(t)},
                  {"standard_object_injective", injective_standard}});
        } else if (c_layer->parsed()) {
            MultTable t = layer_mults(parse_weight(flavor(), lam_s), k, window);
            emit({{"base", to_string(t.base)}, {"table", table_json(t)}});
        } else if (c_leqfin->parsed()) {
            emit({{"value", leq_fin(parse_weight(flavor(), mu_s),
                                    parse_weight(flavor(), lam_s))}});
        } else if (c_finup->parsed()) {
            emit({{"weights",
                   weights_json(fin_up_set(parse_weight(flavor(), mu_s)))}});
        } else if (c_leqinf->parsed()) {
            OrderCert cert;
            bool v = leq_inf(parse_weight(flavor(), mu_s),
                             parse_weight(flavor(), lam_s), max_depth,
                             want_cert ? &cert : nullptr, widen);
            json out{{"value", v}};
            if (want_cert && v) {
                json steps = json::array();
                for (const OrderCertStep& s : cert.steps)
                    steps.push_back({{"kind", s.gamma_step ? "gamma" : "fin"},
                                     {"k", s.k},
                                     {"to", to_string(s.to)}});
                out["cert"] = {{"start", to_string(cert.start)},
                               {"steps", steps}};
            }
            emit(out);
        } else if (c_interval->parsed()) {
            emit({{"weights",
                   weights_json(inf_interval(parse_weight(flavor(), mu_s),
                                             parse_weight(flavor(), lam_s),
                                             widen))}});
        } else if (c_block->parsed()) {
            BlockLabel l = block_label(parse_weight(flavor(), w_s));
            json frac = json::object();
            for (const auto& [i, f] : l.fractional)
                frac[std::to_string(i)] = to_string(f);
            json out{{"fractional", frac}};
            if (l.flavor == LieFlavor::SL)
                out["sum"] = to_string(l.sl_sum);
            else
                out["parity"] = l.parity;
            emit(out);
        } else if (c_degree->parsed()) {
            emit({{"value", to_string(degree(parse_weight(flavor(), w_s)))}});
        } else if (c_dom->parsed()) {
            emit({{"value", is_b_dominant(parse_weight(flavor(), w_s))}});
        } else if (c_ann->parsed()) {
            emit({{"label", to_string(annihilator_of_integrable(
                       parse_weight(flavor(), lam_s)))}});
        } else if (c_wfl->parsed()) {
            Weight w = weight_from_label(label_x, parse_partition(yl_s),
                                         parse_partition(yr_s),
                                         parse_rationals(a_s));
            emit({{"weight", to_string(w)},
                  {"label", to_string(PrimitiveIdealLabel{
                       label_x, 0, parse_partition(yl_s),
                       parse_partition(yr_s)})}});
        } else if (c_self->parsed()) {
            long long failed = 0;
            json suites = json::array();
            for (const SelfTestResult& r : run_selftests()) {
                failed += r.failed;
                json s{{"name", r.name},
                       {"checked", r.checked},
                       {"failed", r.failed}};
                if (!r.first_failure.empty())
                    s["first_failure"] = r.first_failure;
                suites.push_back(s);
            }
            emit({{"suites", suites}, {"all_passed", failed == 0}});
            return failed == 0 ? 0 : 2;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
