#include <CLI11.hpp>
#include <json.hpp>

#include "klsw/goldens.hpp"
#include "klsw/parallel.hpp"
#include "klsw/project.hpp"
#include "klsw/qformat.hpp"
#include "klsw/specht.hpp"
#include "klsw/suites.hpp"
#include "klsw/tworow.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace klsw;

namespace {

struct GlobalOpts {
    std::string kl_cache;
    int jobs = 0;
    std::string format = "text";
    int max_r = 0;
    std::vector<int> ranks_used;
};

// One cache file with sections per rank; foreign sections are preserved.
void load_kl_cache(const GlobalOpts& g, int r) {
    if (g.kl_cache.empty()) return;
    std::ifstream in(g.kl_cache);
    if (!in) return;
    hecke::hecke_context(r)->kl().load(in);
}

void save_kl_cache(GlobalOpts& g) {
    if (g.kl_cache.empty() || g.ranks_used.empty()) return;
    // collect existing foreign sections
    std::map<int, std::vector<std::string>> sections;
    {
        std::ifstream in(g.kl_cache);
        std::string line;
        int cur = -1;
        while (in && std::getline(in, line)) {
            if (line.rfind("r ", 0) == 0) cur = std::stoi(line.substr(2));
            else if (line.rfind("p ", 0) == 0 && cur > 0) sections[cur].push_back(line);
        }
    }
    for (int r : g.ranks_used) {
        std::ostringstream os;
        hecke::hecke_context(r)->kl().save(os);
        std::istringstream is(os.str());
        std::string line;
        sections[r].clear();
        while (std::getline(is, line))
            if (line.rfind("p ", 0) == 0) sections[r].push_back(line);
    }
    std::ofstream out(g.kl_cache);
    out << "klsw-kl-cache 1\n";
    for (auto& [r, lines] : sections) {
        out << "r " << r << "\n";
        for (auto& l : lines) out << l << "\n";
    }
}

int use_rank(GlobalOpts& g, int r, int hard_cap) {
    if (r < 1 || r > hard_cap) {
        std::cerr << "error: rank " << r << " outside the supported range 1.." << hard_cap
                  << "\n";
        return 2;
    }
    load_kl_cache(g, r);
    g.ranks_used.push_back(r);
    return 0;
}

std::string render(const RatFn& f, const std::string& format) {
    return format == "text" ? f.to_pretty_string() : f.to_string();
}

void print_labeled_matrix(const project::LabeledMatrix& lm, const std::string& format,
                          std::ostream& os) {
    if (format == "json") {
        nlohmann::json j;
        j["schema"] = "klsw-matrix-1";
        j["rows"] = lm.row_labels;
        j["cols"] = lm.col_labels;
        auto entries = nlohmann::json::array();
        for (size_t i = 0; i < lm.m.rows(); ++i) {
            auto row = nlohmann::json::array();
            for (size_t jx = 0; jx < lm.m.cols(); ++jx) row.push_back(lm.m.at(i, jx).to_string());
            entries.push_back(row);
        }
        j["entries"] = entries;
        j["conventions"] = suites::conventions();
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "row";
        for (auto& c : lm.col_labels) os << "," << c;
        os << "\n";
        for (size_t i = 0; i < lm.m.rows(); ++i) {
            os << lm.row_labels[i];
            for (size_t jx = 0; jx < lm.m.cols(); ++jx)
                os << ",\"" << lm.m.at(i, jx).to_string() << "\"";
            os << "\n";
        }
    } else {
        size_t width = 0;
        std::vector<std::vector<std::string>> cells(lm.m.rows());
        for (size_t i = 0; i < lm.m.rows(); ++i)
            for (size_t jx = 0; jx < lm.m.cols(); ++jx) {
                cells[i].push_back(lm.m.at(i, jx).to_pretty_string());
                width = std::max(width, cells[i].back().size());
            }
        for (size_t i = 0; i < lm.m.rows(); ++i) {
            os << lm.row_labels[i] << " |";
            for (auto& c : cells[i]) os << " " << std::string(width - c.size(), ' ') << c;
            os << "\n";
        }
    }
}

project::LabeledMatrix table_to_matrix(const goldens::Table& t) {
    project::LabeledMatrix lm;
    lm.row_labels = t.row_labels;
    lm.col_labels = t.col_labels;
    lm.m = QMatrix(t.entries.size(), t.entries[0].size());
    for (size_t i = 0; i < t.entries.size(); ++i)
        for (size_t j = 0; j < t.entries[i].size(); ++j) lm.m.at(i, j) = parse_qexpr(t.entries[i][j]);
    return lm;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kazhdan-Lusztig canonical bases, Schur-Weyl projections, and "
                 "transition matrices"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--kl-cache", g.kl_cache, "path of the Kazhdan-Lusztig memo file");
    app.add_option("--jobs", g.jobs, "worker threads (1 = serial reference)");
    app.add_option("--format", g.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-r", g.max_r, "override the default rank bound of verify suites");

    auto* klb = app.add_subcommand("klbasis", "canonical basis element of H_r in the T basis");
    int klb_r = 3;
    std::string klb_w = "1", klb_kind = "lower";
    klb->add_option("--r", klb_r, "rank")->required();
    klb->add_option("--w", klb_w, "permutation in one-line notation")->required();
    klb->add_option("--kind", klb_kind, "upper or lower")
        ->check(CLI::IsMember({"upper", "lower"}));

    auto* tcb = app.add_subcommand("tensor-canbasis", "canonical basis of V^(x)r");
    int tcb_n = 2, tcb_r = 3;
    std::string tcb_basis = "lower", tcb_weight;
    tcb->add_option("--n", tcb_n, "alphabet size")->required();
    tcb->add_option("--r", tcb_r, "tensor degree")->required();
    tcb->add_option("--basis", tcb_basis, "upper or lower")
        ->check(CLI::IsMember({"upper", "lower"}));
    tcb->add_option("--weight", tcb_weight, "restrict to one content, e.g. 2,1");

    auto* trn = app.add_subcommand("transition", "projected-to-canonical transition matrix");
    int trn_r = 3;
    std::string trn_matrix = "Ttilde";
    trn->add_option("--matrix", trn_matrix, "Ttilde or TtildePrime")
        ->check(CLI::IsMember({"Ttilde", "TtildePrime"}));
    trn->add_option("--r", trn_r, "rank")->required();

    auto* idm = app.add_subcommand("idempotent", "minimal central idempotent in the T basis");
    int idm_r = 2;
    std::string idm_shape = "2";
    idm->add_option("--r", idm_r, "rank")->required();
    idm->add_option("--shape", idm_shape, "partition, e.g. 3,1")->required();

    auto* spc = app.add_subcommand("specht", "transition matrices of the Specht module");
    std::string spc_shape = "3,1", spc_matrix = "T", spc_norm = "u0";
    spc->add_option("--shape", spc_shape, "partition")->required();
    spc->add_option("--matrix", spc_matrix, "T, Tprime, Tprime-inv, D or S")
        ->check(CLI::IsMember({"T", "Tprime", "Tprime-inv", "D", "S"}));
    spc->add_option("--normalize", spc_norm, "u0 or gcd")->check(CLI::IsMember({"u0", "gcd"}));

    auto* twr = app.add_subcommand("tworow", "arc diagrams and two-row projections");
    std::string twr_op = "diagram", twr_word;
    int twr_r = 0;
    twr->add_option("--op", twr_op, "diagram, yamanouchi or project")
        ->check(CLI::IsMember({"diagram", "yamanouchi", "project"}));
    twr->add_option("--word", twr_word, "word over {1,2}");
    twr->add_option("--r", twr_r, "run over all words of this length instead");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite = "battery";
    ver->add_option("--suite", ver_suite, "suite name or 'all'");

    auto* emt = app.add_subcommand("emit", "emit a reference table computed from scratch");
    std::string emt_figure = "s4-ttilde";
    emt->add_option("--figure", emt_figure,
                    "s4-ttilde, t31, d31, tp31-inv, s31, tp42-inv, s42");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    set_parallel_jobs(g.jobs);

    try {
        if (*klb) {
            if (int rc = use_rank(g, klb_r, 7)) return rc;
            auto hc = hecke::hecke_context(klb_r);
            int w = hc->group().index(comb::perm_from_string(klb_w));
            auto e = hc->kl_basis(w, klb_kind == "upper" ? hecke::HBasis::C : hecke::HBasis::Cp);
            if (g.format == "json") {
                nlohmann::json j;
                j["schema"] = "klsw-element-1";
                j["basis"] = "T";
                auto terms = nlohmann::json::array();
                for (auto& [x, c] : e.coords)
                    terms.push_back({{"w", comb::perm_to_string(hc->group().perm(x))},
                                     {"coeff", c.to_string()}});
                j["terms"] = terms;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << hc->to_string(e, g.format == "text") << "\n";
            }
            save_kl_cache(g);
            return 0;
        }
        if (*tcb) {
            if (tcb_n < 1 || tcb_n > 6 || tcb_r < 1 || tcb_r > 12) {
                std::cerr << "error: tensor parameters out of range\n";
                return 2;
            }
            tensor::TensorSpace ts(tcb_n, tcb_r);
            bool lower = tcb_basis == "lower";
            std::vector<comb::Word> words;
            if (!tcb_weight.empty()) {
                std::vector<int> content;
                std::stringstream ss(tcb_weight);
                std::string tok;
                while (std::getline(ss, tok, ',')) content.push_back(std::stoi(tok));
                if ((int)content.size() != tcb_n) {
                    std::cerr << "error: weight must have n parts\n";
                    return 2;
                }
                words = comb::words_of_content(content);
            } else {
                words = comb::all_words(tcb_n, tcb_r);
            }
            nlohmann::json elements = nlohmann::json::array();
            for (auto& k : words) {
                auto e = ts.canonical_elt(k, lower);
                if (g.format == "json") {
                    nlohmann::json je;
                    je["word"] = comb::word_to_string(k);
                    auto terms = nlohmann::json::array();
                    for (auto& [m, c] : e.coords)
                        terms.push_back({{"word", comb::word_to_string(m)},
                                         {"coeff", c.to_string()}});
                    je["terms"] = terms;
                    elements.push_back(je);
                } else {
                    std::cout << (lower ? "c'[" : "c[") << comb::word_to_string(k)
                              << "] = " << tensor::to_string(e, g.format == "text") << "\n";
                }
            }
            if (g.format == "json") {
                nlohmann::json j;
                j["schema"] = "klsw-canbasis-1";
                j["n"] = tcb_n;
                j["r"] = tcb_r;
                j["basis"] = tcb_basis;
                j["elements"] = elements;
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
        if (*trn) {
            if (int rc = use_rank(g, trn_r, 6)) return rc;
            auto lm = project::transition_ttilde(trn_r, trn_matrix == "TtildePrime");
            print_labeled_matrix(lm, g.format, std::cout);
            save_kl_cache(g);
            return 0;
        }
        if (*idm) {
            if (int rc = use_rank(g, idm_r, 6)) return rc;
            auto hr = project::hecke_realization(idm_r);
            auto p = hr->central_idempotent(comb::partition_from_string(idm_shape));
            std::cout << hr->ctx().to_string(p, g.format == "text") << "\n";
            save_kl_cache(g);
            return 0;
        }
        if (*spc) {
            auto lam = comb::partition_from_string(spc_shape);
            int r = 0;
            for (int p : lam) r += p;
            if (int rc = use_rank(g, r, 7)) return rc;
            project::LabeledMatrix lm;
            for (auto& q : comb::syt_sorted(lam)) lm.row_labels.push_back(q.to_string());
            lm.col_labels = lm.row_labels;
            if (spc_matrix == "T")
                lm.m = specht::seminormal_transition(lam, false).m;
            else if (spc_matrix == "Tprime")
                lm.m = specht::seminormal_transition(lam, true).m;
            else if (spc_matrix == "Tprime-inv")
                lm.m = inverse(specht::seminormal_transition(lam, true).m);
            else if (spc_matrix == "D")
                lm.m = specht::s_matrix(lam).d.m;
            else
                lm.m = specht::s_matrix(lam).s.m;
            if (spc_norm == "gcd") {
                auto norm = suites::normalize_gcd(lm.m);
                std::cout << "# gcd normalizer D(M) = " << norm.normalizer.to_pretty_string()
                          << " (up to sign)\n";
                lm.m = norm.normalized;
            } else {
                std::cout << "# u0 normalization: diagonal fixed to 1 at u = 0\n";
            }
            print_labeled_matrix(lm, g.format, std::cout);
            save_kl_cache(g);
            return 0;
        }
        if (*twr) {
            std::vector<comb::Word> words;
            if (!twr_word.empty())
                words.push_back(comb::word_from_string(twr_word));
            else if (twr_r >= 1 && twr_r <= 12)
                words = comb::all_words(2, twr_r);
            else {
                std::cerr << "error: give --word or --r within 1..12\n";
                return 2;
            }
            for (auto& k : words) {
                if (twr_op == "diagram") {
                    std::cout << tworow::build_diagram(k).render() << "\n";
                } else if (twr_op == "yamanouchi") {
                    std::cout << comb::word_to_string(k) << " "
                              << (tworow::is_yamanouchi(k) ? "yes" : "no") << "\n";
                } else {
                    if (!tworow::is_yamanouchi(k)) {
                        if (!twr_word.empty()) {
                            std::cerr << "error: project requires a Yamanouchi word\n";
                            return 2;
                        }
                        continue;
                    }
                    std::cout << "(" << comb::word_to_string(k) << "): ";
                    bool first = true;
                    for (auto& [c, w] : tworow::projected_lower_tworow(k)) {
                        if (!first) std::cout << " + ";
                        first = false;
                        std::cout << "(" << c.to_pretty_string() << ")*c'["
                                  << comb::word_to_string(comb::word_reverse(w)) << "]";
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (*ver) {
            std::vector<std::string> names;
            if (ver_suite == "all")
                names = suites::suite_names();
            else
                names.push_back(ver_suite);
            bool violated = false;
            for (auto& name : names) {
                int cap = name == "tworow-crosscheck" ? 8 : 6;
                if (g.max_r > cap + 2) {
                    std::cerr << "error: --max-r " << g.max_r << " exceeds the resource bound "
                              << cap + 2 << " for suite " << name << "\n";
                    return 2;
                }
                auto rep = suites::run_suite(name, g.max_r);
                if (g.format == "json")
                    std::cout << suites::report_to_json(rep, true) << "\n";
                else
                    std::cout << suites::report_to_text(rep);
                violated = violated || rep.hard_failure();
            }
            save_kl_cache(g);
            return violated ? 1 : 0;
        }
        if (*emt) {
            // recompute the requested table from scratch and print it with
            // the printed row/column labels
            project::LabeledMatrix lm;
            if (emt_figure == "s4-ttilde") {
                if (int rc = use_rank(g, 4, 6)) return rc;
                const auto& tab = goldens::s4_ttilde();
                auto hr = project::hecke_realization(4);
                const auto& grp = hr->ctx().group();
                lm.row_labels = tab.row_labels;
                lm.col_labels = tab.col_labels;
                lm.m = QMatrix(tab.row_labels.size(), tab.col_labels.size());
                for (size_t j = 0; j < tab.col_labels.size(); ++j) {
                    auto col = hr->projected_elt(
                        grp.index(comb::perm_from_string(tab.col_labels[j])), false);
                    for (size_t i = 0; i < tab.row_labels.size(); ++i) {
                        auto it =
                            col.coords.find(grp.index(comb::perm_from_string(tab.row_labels[i])));
                        if (it != col.coords.end()) lm.m.at(i, j) = it->second;
                    }
                }
            } else if (emt_figure == "t31") {
                lm = table_to_matrix(goldens::t31());
                lm.m = specht::seminormal_transition({3, 1}, false).m;
            } else if (emt_figure == "d31") {
                lm = table_to_matrix(goldens::d31());
                lm.m = specht::s_matrix({3, 1}).d.m;
            } else if (emt_figure == "tp31-inv") {
                lm = table_to_matrix(goldens::tp31_inv());
                lm.m = inverse(specht::seminormal_transition({3, 1}, true).m);
            } else if (emt_figure == "s31") {
                lm = table_to_matrix(goldens::s31());
                lm.m = suites::normalize_gcd(specht::s_matrix({3, 1}).s.m).normalized;
            } else if (emt_figure == "tp42-inv") {
                lm = table_to_matrix(goldens::tp42_inv());
                lm.m = inverse(specht::seminormal_transition({4, 2}, true).m);
            } else if (emt_figure == "s42") {
                lm = table_to_matrix(goldens::s42());
                lm.m = suites::normalize_gcd(specht::s_matrix({4, 2}).s.m).normalized;
            } else {
                std::cerr << "error: unknown figure " << emt_figure << "\n";
                return 2;
            }
            print_labeled_matrix(lm, g.format, std::cout);
            save_kl_cache(g);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
