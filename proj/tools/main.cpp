#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "delrecon/cache.hpp"
#include "delrecon/deletion_ball.hpp"
#include "delrecon/formulas.hpp"
#include "delrecon/intersect.hpp"
#include "delrecon/reconstruct.hpp"
#include "delrecon/search.hpp"

namespace {

using delrecon::BinarySequence;
using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

struct GlobalOpts {
    std::string output = "text";
    int exit_code = 0;
};

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

void echo_params(const GlobalOpts& g, const json& params) {
    if (g.output != "json") std::cerr << "params: " << params.dump() << '\n';
}

json base_doc(const std::string& command, const json& params) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["params"] = params;
    return doc;
}

void require_text_or_json(const GlobalOpts& g) {
    if (g.output == "csv") throw CLI::ValidationError("--output csv is not available here");
}

void add_ball(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("ball", "Enumerate a deletion ball");
    auto x = std::make_shared<std::string>();
    auto t = std::make_shared<int>(0);
    auto size_only = std::make_shared<bool>(false);
    cmd->add_option("--x", *x, "center word ('0'/'1' string)")->required();
    cmd->add_option("--t", *t, "number of deletions")->required();
    cmd->add_flag("--size-only", *size_only, "print only the ball size");
    cmd->callback([&g, x, t, size_only] {
        require_text_or_json(g);
        const auto center = BinarySequence::parse(*x);
        const json params = {{"x", *x}, {"t", *t}, {"size_only", *size_only}, {"output", g.output}};
        echo_params(g, params);
        const auto ball = delrecon::deletion_ball(center, *t);
        if (g.output == "json") {
            json doc = base_doc("ball", params);
            doc["size"] = ball.size();
            if (!*size_only) {
                auto& arr = doc["elements"] = json::array();
                for (const auto& z : ball.elements) arr.push_back(z.str());
            }
            emit(doc);
        } else if (*size_only) {
            std::cout << ball.size() << '\n';
        } else {
            for (const auto& z : ball.elements) std::cout << z.str() << '\n';
        }
    });
}

void add_distance(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("distance", "Deletion distance between equal-length words");
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    cmd->add_option("--x", *x)->required();
    cmd->add_option("--y", *y)->required();
    cmd->callback([&g, x, y] {
        require_text_or_json(g);
        const json params = {{"x", *x}, {"y", *y}, {"output", g.output}};
        echo_params(g, params);
        const int d = delrecon::levenshtein_distance(BinarySequence::parse(*x),
                                                     BinarySequence::parse(*y));
        if (g.output == "json") {
            json doc = base_doc("distance", params);
            doc["value"] = d;
            emit(doc);
        } else {
            std::cout << d << '\n';
        }
    });
}

void add_intersect(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("intersect", "Deletion-ball intersection size");
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    auto s = std::make_shared<int>(0);
    auto t = std::make_shared<int>(0);
    auto wit = std::make_shared<bool>(false);
    cmd->add_option("--x", *x)->required();
    cmd->add_option("--y", *y)->required();
    cmd->add_option("--s", *s, "radius on x")->required();
    cmd->add_option("--t", *t, "radius on y")->required();
    cmd->add_flag("--witnesses", *wit, "also list the shared words");
    cmd->callback([&g, x, y, s, t, wit] {
        require_text_or_json(g);
        const auto xs = BinarySequence::parse(*x), ys = BinarySequence::parse(*y);
        const json params = {{"x", *x},  {"y", *y},          {"s", *s},
                             {"t", *t},  {"witnesses", *wit}, {"output", g.output}};
        echo_params(g, params);
        const auto size = delrecon::intersection_size(xs, *s, ys, *t);
        if (g.output == "json") {
            json doc = base_doc("intersect", params);
            doc["size"] = size;
            if (*wit) {
                auto& arr = doc["elements"] = json::array();
                for (const auto& z : delrecon::intersection_elements(xs, *s, ys, *t))
                    arr.push_back(z.str());
            }
            emit(doc);
        } else {
            std::cout << size << '\n';
            if (*wit)
                for (const auto& z : delrecon::intersection_elements(xs, *s, ys, *t))
                    std::cout << z.str() << '\n';
        }
    });
}

std::uint64_t formula_value(int n, int d, int t) {
    if (d == 1) return delrecon::n_value_d1(n, t);
    if (d == 2 && t == 3) return delrecon::n_value_d2_t3(n);
    if (d == 2) return delrecon::n_value_d2(n, t);
    if (d == 3 && t == 3) return delrecon::n_value_d3_t3(n);
    if (d == 3 && t == 4) {
        if (n < 13) throw std::domain_error("closed form starts at n = 13; use table or search");
        return delrecon::n_value_d3_t4(n);
    }
    if (d == t) return delrecon::n_value_dd(d);
    if (d == 3 && t >= 5) {
        throw std::domain_error("no proved closed form for d = 3, t >= 5 (the candidate M(n,t) "
                                "is only a lower bound); use search");
    }
    throw std::domain_error("no closed form for these parameters");
}

void add_nvalue(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("nvalue", "Largest deletion-ball intersection at distance >= d");
    struct Opts {
        int n = 0, d = 0, t = 0, threads = 1;
        std::string mode = "search";
        bool extended = false, no_symmetry = false, use_cache = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--n", o->n)->required();
    cmd->add_option("--d", o->d)->required();
    cmd->add_option("--t", o->t)->required();
    cmd->add_option("--mode", o->mode)->check(CLI::IsMember({"formula", "table", "search"}));
    cmd->add_option("--threads", o->threads)->check(CLI::PositiveNumber);
    cmd->add_flag("--extended", o->extended, "allow n = 14..16 and t >= 5 at n = 13");
    cmd->add_flag("--no-symmetry", o->no_symmetry, "disable symmetry reduction (debugging)");
    cmd->add_flag("--cache", o->use_cache, "reuse and populate the on-disk report cache");
    cmd->callback([&g, o] {
        const json params = {{"n", o->n},           {"d", o->d},
                             {"t", o->t},           {"mode", o->mode},
                             {"threads", o->threads}, {"extended", o->extended},
                             {"symmetry", !o->no_symmetry}, {"cache", o->use_cache},
                             {"output", g.output}};
        echo_params(g, params);
        std::uint64_t value = 0;
        std::string source = o->mode;
        json extra;
        if (o->mode == "formula") {
            value = formula_value(o->n, o->d, o->t);
        } else if (o->mode == "table") {
            const auto known = delrecon::known_n_value(o->n, o->d, o->t);
            if (!known) throw std::domain_error("no published value for these parameters");
            value = *known;
        } else {
            std::optional<delrecon::SearchReport> report;
            if (o->use_cache) {
                if (auto hit = delrecon::cache_load(o->n, o->d, o->t)) {
                    report = *hit;
                    source = "cache";
                }
            }
            if (!report) {
                delrecon::SearchOptions so;
                so.threads = o->threads;
                so.symmetry_reduction = !o->no_symmetry;
                so.extended = o->extended;
                report = delrecon::nvalue_search(o->n, o->d, o->t, so);
                if (o->use_cache) delrecon::cache_store(*report);
            }
            value = report->value;
            if (report->witness) {
                extra["witness_x"] = report->witness->x.str();
                extra["witness_y"] = report->witness->y.str();
            } else {
                extra["witness_x"] = nullptr;
                extra["witness_y"] = nullptr;
            }
            extra["pairs_scanned"] = report->pairs_scanned;
            extra["classes_scanned"] = report->classes_scanned;
            extra["engine_version"] = report->engine;
            extra["elapsed_seconds"] = report->elapsed_seconds;
        }
        if (g.output == "json") {
            json doc = base_doc("nvalue", params);
            doc["n"] = o->n;
            doc["d"] = o->d;
            doc["t"] = o->t;
            doc["value"] = value;
            doc["source"] = source;
            for (auto& [k, v] : extra.items()) doc[k] = v;
            emit(doc);
        } else if (g.output == "csv") {
            std::cout << "n,d,t,value,source\n"
                      << o->n << ',' << o->d << ',' << o->t << ',' << value << ',' << source
                      << '\n';
        } else {
            std::cout << value << '\n';
            if (extra.contains("witness_x") && !extra["witness_x"].is_null())
                std::cout << "witness " << extra["witness_x"].get<std::string>() << ' '
                          << extra["witness_y"].get<std::string>() << '\n';
        }
    });
}

void add_construct(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("construct", "Extremal pair construction");
    struct Opts {
        int n = 0, d = 3, t = -1;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--n", o->n)->required();
    cmd->add_option("--d", o->d)->required();
    cmd->add_option("--t", o->t, "radius (defaults to 4 for d=3, to d otherwise)");
    cmd->callback([&g, o] {
        require_text_or_json(g);
        const int t = o->t >= 0 ? o->t : (o->d == 3 ? 4 : o->d);
        const json params = {{"n", o->n}, {"d", o->d}, {"t", t}, {"output", g.output}};
        echo_params(g, params);
        const auto wit = delrecon::construct_extremal(o->n, o->d, t);
        if (g.output == "json") {
            json doc = base_doc("construct", params);
            doc["witness"] = {{"x", wit.x.str()},
                              {"y", wit.y.str()},
                              {"n", wit.n},
                              {"min_distance_claimed", wit.min_distance_claimed},
                              {"radius", wit.radius},
                              {"intersection", wit.intersection}};
            emit(doc);
        } else {
            std::cout << wit.x.str() << '\n' << wit.y.str() << '\n';
            std::cout << "intersection " << wit.intersection << " at radius " << wit.radius
                      << '\n';
        }
    });
}

void add_verify(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("verify-claims", "Recompute the published search constants");
    struct Opts {
        std::vector<std::string> only;
        bool extended = false;
        int threads = 1;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--only", o->only, "run only the named claims (repeatable)");
    cmd->add_flag("--extended", o->extended, "also recompute the hours-scale claims");
    cmd->add_option("--threads", o->threads)->check(CLI::PositiveNumber);
    cmd->callback([&g, o] {
        const json params = {{"only", o->only},
                             {"extended", o->extended},
                             {"threads", o->threads},
                             {"output", g.output}};
        echo_params(g, params);
        delrecon::VerifyOptions vo;
        vo.only = o->only;
        vo.extended = o->extended;
        vo.threads = o->threads;
        const auto records = delrecon::verify_constants(vo);
        bool all_pass = true;
        for (const auto& r : records) all_pass = all_pass && r.passed();
        if (g.output == "json") {
            json doc = base_doc("verify-claims", params);
            auto& arr = doc["claims"] = json::array();
            for (const auto& r : records)
                arr.push_back({{"id", r.id},
                               {"location", r.location},
                               {"relation", r.relation},
                               {"expected", r.expected},
                               {"computed", r.computed},
                               {"status", r.status}});
            doc["all_pass"] = all_pass;
            emit(doc);
        } else if (g.output == "csv") {
            std::cout << "id,location,relation,expected,computed,status\n";
            for (const auto& r : records)
                std::cout << r.id << ",\"" << r.location << "\"," << r.relation << ','
                          << r.expected << ',' << r.computed << ',' << r.status << '\n';
        } else {
            for (const auto& r : records) {
                const char* tag = r.status == "pass"            ? "PASS"
                                  : r.status == "fail"          ? "FAIL"
                                                                : "SKIP";
                std::printf("[%s] %-24s expected %s %llu, computed %llu  (%s)\n", tag,
                            r.id.c_str(), r.relation == "eq" ? "=" : "<=",
                            static_cast<unsigned long long>(r.expected),
                            static_cast<unsigned long long>(r.computed), r.location.c_str());
            }
            std::printf("%s: %zu claims\n", all_pass ? "ALL PASS" : "FAILURES PRESENT",
                        records.size());
        }
        if (!all_pass) g.exit_code = 1;
    });
}

void add_reconstruct(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("reconstruct-sim", "Multi-read channel threshold experiment");
    struct Opts {
        int n = 0, d = 0, t = 0, trials = 100;
        std::uint64_t seed = 1;
        std::string code = "greedy";
        std::string json_path;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--n", o->n)->required();
    cmd->add_option("--d", o->d)->required();
    cmd->add_option("--t", o->t)->required();
    cmd->add_option("--trials", o->trials)->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o->seed);
    cmd->add_option("--code", o->code)->check(CLI::IsMember({"greedy"}));
    cmd->add_option("--json", o->json_path, "also write the JSON report to this file");
    cmd->callback([&g, o] {
        require_text_or_json(g);
        const json params = {{"n", o->n},         {"d", o->d},    {"t", o->t},
                             {"trials", o->trials}, {"seed", o->seed}, {"code", o->code},
                             {"output", g.output}};
        echo_params(g, params);
        const auto rep = delrecon::threshold_experiment(
            {o->n, o->d, o->t, o->trials, o->seed});
        json doc = base_doc("reconstruct-sim", params);
        doc["params"]["generator"] = rep.generator;
        doc["max_intersection"] = rep.max_intersection;
        doc["threshold"] = rep.threshold;
        doc["positive"] = {{"trials_requested", rep.params.trials},
                           {"trials_run", rep.trials_run},
                           {"skipped", rep.skipped},
                           {"unique_successes", rep.unique_successes}};
        doc["positive_pass_rate"] = rep.positive_pass_rate;
        json cands = json::array();
        for (const auto& c : rep.sharp_candidates) cands.push_back(c.str());
        doc["sharpness_witness"] = {{"x", rep.sharp_x.str()},
                                    {"y", rep.sharp_y.str()},
                                    {"reads_count", rep.sharp_reads_count},
                                    {"candidates", cands}};
        if (!o->json_path.empty()) {
            std::ofstream out(o->json_path);
            out << doc.dump(2) << '\n';
            if (!out) throw std::runtime_error("failed to write " + o->json_path);
        }
        if (g.output == "json") {
            emit(doc);
        } else {
            std::printf("threshold %llu reads (max intersection %llu)\n",
                        static_cast<unsigned long long>(rep.threshold),
                        static_cast<unsigned long long>(rep.max_intersection));
            std::printf("positive: %d/%d unique decodes (%d skipped), rate %.4f\n",
                        rep.unique_successes, rep.trials_run, rep.skipped,
                        rep.positive_pass_rate);
            std::printf("sharpness: %zu reads from (%s, %s) leave %zu candidates\n",
                        rep.sharp_reads_count, rep.sharp_x.str().c_str(),
                        rep.sharp_y.str().c_str(), rep.sharp_candidates.size());
        }
    });
}

void add_cache(CLI::App& app, GlobalOpts& g) {
    auto* cmd = app.add_subcommand("cache", "Inspect the on-disk search report cache");
    cmd->require_subcommand(1);

    auto* dir = cmd->add_subcommand("dir", "print the cache directory");
    dir->callback([&g] {
        echo_params(g, json::object());
        if (g.output == "json") {
            json doc = base_doc("cache dir", json::object());
            doc["directory"] = delrecon::cache_directory().string();
            emit(doc);
        } else {
            std::cout << delrecon::cache_directory().string() << '\n';
        }
    });

    auto* show = cmd->add_subcommand("show", "print one cached report");
    struct Key {
        int n = 0, d = 0, t = 0;
    };
    auto key = std::make_shared<Key>();
    show->add_option("--n", key->n)->required();
    show->add_option("--d", key->d)->required();
    show->add_option("--t", key->t)->required();
    show->callback([&g, key] {
        const json params = {{"n", key->n}, {"d", key->d}, {"t", key->t}, {"output", g.output}};
        echo_params(g, params);
        const auto rep = delrecon::cache_load(key->n, key->d, key->t);
        if (!rep) {
            std::cerr << "no cache entry for these parameters\n";
            g.exit_code = 1;
            return;
        }
        json doc = base_doc("cache show", params);
        doc["value"] = rep->value;
        doc["witness_x"] = rep->witness ? json(rep->witness->x.str()) : json(nullptr);
        doc["witness_y"] = rep->witness ? json(rep->witness->y.str()) : json(nullptr);
        doc["pairs_scanned"] = rep->pairs_scanned;
        doc["classes_scanned"] = rep->classes_scanned;
        doc["engine_version"] = rep->engine;
        if (g.output == "json")
            emit(doc);
        else
            std::cout << doc.dump(2) << '\n';
    });

    auto* clear = cmd->add_subcommand("clear", "delete the whole cache directory");
    clear->callback([&g] {
        echo_params(g, json::object());
        std::filesystem::remove_all(delrecon::cache_directory());
        if (g.output == "json") emit(base_doc("cache clear", json::object()));
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deletion-channel sequence reconstruction toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--output", g.output, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    add_ball(app, g);
    add_distance(app, g);
    add_intersect(app, g);
    add_nvalue(app, g);
    add_construct(app, g);
    add_verify(app, g);
    add_reconstruct(app, g);
    add_cache(app, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const delrecon::CacheError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return g.exit_code;
}
