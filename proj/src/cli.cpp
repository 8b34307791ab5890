#include "sl2ext/cli.hpp"

#include "sl2ext/engine.hpp"
#include "sl2ext/golden.hpp"
#include "sl2ext/h2.hpp"
#include "sl2ext/strings.hpp"
#include "sl2ext/verify.hpp"
#include "sl2ext/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace sl2ext {

namespace {

using nlohmann::json;

Weight parse_weight(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("'" + text + "' is not a non-negative integer weight");
    return Weight(text);
}

std::pair<Weight, Weight> parse_weight_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("'" + text + "' is not a weight pair 'w1,w2'");
    return {parse_weight(text.substr(0, comma)), parse_weight(text.substr(comma + 1))};
}

const char* status_name(TraceStatus status) {
    switch (status) {
    case TraceStatus::Failed: return "failed";
    case TraceStatus::TrivialLeaf: return "trivial";
    case TraceStatus::NontrivialLeaf: return "nontrivial";
    }
    return "?";
}

const char* reason_name(H2Witness::Reason reason) {
    switch (reason) {
    case H2Witness::Reason::TwoP: return "2p";
    case H2Witness::Reason::TwoPSquaredMinus: return "2p^2-2p-2";
    case H2Witness::Reason::PowerFamily: return "2p-2+(2p-2)p^e";
    case H2Witness::Reason::NotInList: return "none";
    }
    return "?";
}

void print_string(std::ostream& out, std::span<const unsigned> entries) {
    out << '(';
    for (std::size_t i = 0; i < entries.size(); ++i)
        out << (i ? "," : "") << entries[i];
    out << ')';
}

void print_traces(std::ostream& out, unsigned degree, const Weight& mu, std::uint64_t cap) {
    std::uint64_t total = 0, nontrivial = 0, trivial = 0, failed = 0;
    for_each_trace(degree, mu, cap, [&](const TraceView& t) {
        ++total;
        switch (t.status) {
        case TraceStatus::Failed: ++failed; break;
        case TraceStatus::TrivialLeaf: ++trivial; break;
        case TraceStatus::NontrivialLeaf: ++nontrivial; break;
        }
        out << "a=";
        print_string(out, t.a_string);
        out << ' ' << status_name(t.status) << " at Delta(" << t.terminal_weyl << "), L("
            << t.terminal_simple << ")\n";
    });
    out << total << " traces: " << nontrivial << " nontrivial, " << trivial << " trivial, "
        << failed << " failed\n";
}

json traces_json(unsigned degree, const Weight& mu, std::uint64_t cap) {
    json arr = json::array();
    for_each_trace(degree, mu, cap, [&arr](const TraceView& t) {
        arr.push_back(json{{"a", std::vector<unsigned>(t.a_string.begin(), t.a_string.end())},
                           {"status", status_name(t.status)},
                           {"weyl", t.terminal_weyl.str()},
                           {"simple", t.terminal_simple.str()}});
    });
    return arr;
}

// All dimension-valued JSON output shares one record shape; weights and dims
// are decimal strings so arbitrary precision survives JSON consumers.
json result_entry(unsigned q, const Weight& weyl, const Weight& simple, const DimCount& dim) {
    return json{{"q", q}, {"weyl", weyl.str()}, {"simple", simple.str()}, {"dim", dim.str()}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void require_not_csv(const std::string& format) {
    if (format == "csv")
        throw std::invalid_argument("csv output is only available for tables");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ext and cohomology dimensions for SL2 in characteristic p", "sl2ext"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t cap = kDefaultEnumerationCap;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--cap", cap, "limit for exhaustive enumerations");

    struct {
        std::uint32_t p = 0;
        unsigned degree = 0;
        std::string weyl, simple;
        bool trace = false;
    } ext_opt, coh_opt;
    CLI::App* ext_cmd = app.add_subcommand("ext", "dim Ext^q(Delta(weyl), L(simple))");
    ext_cmd->fallthrough();
    ext_cmd->add_option("-p,--characteristic", ext_opt.p, "prime characteristic")->required();
    ext_cmd->add_option("-q,--degree", ext_opt.degree, "cohomological degree")->required();
    ext_cmd->add_option("--weyl", ext_opt.weyl, "Weyl module highest weight")->required();
    ext_cmd->add_option("--simple", ext_opt.simple, "simple module highest weight")->required();
    ext_cmd->add_flag("--trace", ext_opt.trace, "list expansion traces (p=2, weyl=0)");

    CLI::App* coh_cmd = app.add_subcommand("coh", "dim H^m(G, L(simple)), i.e. ext with weyl=0");
    coh_cmd->fallthrough();
    coh_cmd->add_option("-p,--characteristic", coh_opt.p, "prime characteristic")->required();
    coh_cmd->add_option("-m,--degree", coh_opt.degree, "cohomological degree")->required();
    coh_cmd->add_option("--simple", coh_opt.simple, "simple module highest weight")->required();
    coh_cmd->add_flag("--trace", coh_opt.trace, "list expansion traces (p=2)");

    struct {
        std::string kind;
        unsigned max_m = 0;
        unsigned min_m = 0;  // 0 means the kind's default start
        std::string r = "3";
    } table_opt;
    CLI::App* table_cmd = app.add_subcommand("table", "cohomology table of a twist family, p=2");
    table_cmd->fallthrough();
    table_cmd->add_option("kind", table_opt.kind, "family: self-twist or r-twist")
        ->required()
        ->check(CLI::IsMember({"self-twist", "r-twist"}));
    table_cmd->add_option("--max-m", table_opt.max_m, "last degree")->required();
    table_cmd->add_option("--min-m", table_opt.min_m, "first degree (default 1 / 3)");
    table_cmd->add_option("-r,--multiplier", table_opt.r, "odd weight multiplier (r-twist)");

    struct {
        std::string kind;
        unsigned m = 0, n = 0, k = 0;
        std::string mu;
    } strings_opt;
    CLI::App* strings_cmd = app.add_subcommand("strings", "string combinatorics and traces");
    strings_cmd->fallthrough();
    strings_cmd->add_option("kind", strings_opt.kind, "partitions, c, b, or a")
        ->required()
        ->check(CLI::IsMember({"partitions", "c", "b", "a"}));
    strings_cmd->add_option("-m", strings_opt.m, "degree (b, a) / number of parts (partitions)");
    strings_cmd->add_option("-n", strings_opt.n, "b-string length");
    strings_cmd->add_option("-k", strings_opt.k, "c-string length");
    strings_cmd->add_option("--mu", strings_opt.mu, "simple weight for trace listing (a)");

    struct {
        std::uint32_t p = 0;
        std::string mu;
    } h2_opt;
    CLI::App* h2_cmd = app.add_subcommand("h2", "closed-form dim H^2(G, L(mu)), p > 3");
    h2_cmd->fallthrough();
    h2_cmd->add_option("-p,--characteristic", h2_opt.p, "prime characteristic > 3")->required();
    h2_cmd->add_option("--mu", h2_opt.mu, "simple module highest weight")->required();

    struct {
        std::uint32_t p = 0;
        unsigned degree = 0;
        std::string weyl, simple;
    } wall_opt;
    CLI::App* wall_cmd = app.add_subcommand("wall-reduce", "SL3 Ext on a wall via the SL2 engine");
    wall_cmd->fallthrough();
    wall_cmd->add_option("-p,--characteristic", wall_opt.p, "prime characteristic")->required();
    wall_cmd->add_option("-q,--degree", wall_opt.degree, "cohomological degree")->required();
    wall_cmd->add_option("--weyl", wall_opt.weyl, "SL3 Weyl weight 'w1,w2'")->required();
    wall_cmd->add_option("--simple", wall_opt.simple, "SL3 simple weight 'w1,w2'")->required();

    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run self-check suites");
    verify_cmd->fallthrough();
    std::vector<std::string> suite_choices = verify_suite_names();
    suite_choices.emplace_back("all");
    verify_cmd->add_option("suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember(suite_choices));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        ExtEngine engine;

        if (*ext_cmd || *coh_cmd) {
            require_not_csv(format);
            const auto& o = *ext_cmd ? ext_opt : coh_opt;
            const Characteristic p(o.p);
            const Weight weyl = *ext_cmd ? parse_weight(o.weyl) : Weight(0);
            const Weight simple = parse_weight(o.simple);
            if (o.trace && (!p.is_two() || weyl != 0 || o.degree == 0))
                throw std::invalid_argument("--trace requires p=2, weyl=0 and degree >= 1");
            const DimCount dim = engine.ext_dim(o.degree, weyl, simple, p);
            if (format == "text") {
                out << dim << '\n';
                if (o.trace)
                    print_traces(out, o.degree, simple, cap);
            } else {
                json root{{"p", o.p},
                          {"results", json::array({result_entry(o.degree, weyl, simple, dim)})}};
                if (o.trace)
                    root["results"][0]["traces"] = traces_json(o.degree, simple, cap);
                emit_json(out, root);
            }
            return kExitOk;
        }

        if (*table_cmd) {
            const bool self = table_opt.kind == "self-twist";
            const unsigned min_m = table_opt.min_m != 0 ? table_opt.min_m : (self ? 1 : 3);
            if (table_opt.max_m < min_m)
                throw std::invalid_argument("--max-m must be at least the first degree");
            std::vector<TableRow> rows;
            if (self) {
                rows = self_twist_table(engine, table_opt.max_m);
                std::erase_if(rows, [min_m](const TableRow& r) { return r.degree < min_m; });
            } else {
                rows = r_twist_table(engine, parse_weight(table_opt.r), min_m, table_opt.max_m);
            }
            if (format == "csv") {
                out << format_table_csv(rows);
            } else if (format == "json") {
                json results = json::array();
                for (const TableRow& row : rows)
                    results.push_back(result_entry(row.degree, 0, row.weight, row.dim));
                emit_json(out, json{{"p", 2}, {"results", std::move(results)}});
            } else {
                for (const TableRow& row : rows)
                    out << "H^" << row.degree << "(G, L(" << row.weight << ")) = " << row.dim
                        << '\n';
            }
            return kExitOk;
        }

        if (*strings_cmd) {
            require_not_csv(format);
            const std::string& kind = strings_opt.kind;
            if (kind == "partitions" || kind == "c") {
                const DimCount count = kind == "partitions"
                                           ? partitions_of_unity(strings_opt.m)
                                           : count_c_strings(strings_opt.k);
                if (format == "text") {
                    out << count << '\n';
                } else if (kind == "partitions") {
                    emit_json(out, json{{"kind", kind}, {"parts", strings_opt.m},
                                        {"count", count.str()}});
                } else {
                    emit_json(out, json{{"kind", kind}, {"length", strings_opt.k},
                                        {"count", count.str()}});
                }
            } else if (kind == "b") {
                std::uint64_t count = 0;
                if (format == "text") {
                    for_each_b_string(strings_opt.m, strings_opt.n, cap, [&](const BString& b) {
                        ++count;
                        out << "b=";
                        print_string(out, b.entries);
                        out << " a=";
                        print_string(out, b.recovered_a_string());
                        out << '\n';
                    });
                    out << count << " strings\n";
                } else {
                    json arr = json::array();
                    for_each_b_string(strings_opt.m, strings_opt.n, cap, [&](const BString& b) {
                        ++count;
                        arr.push_back(json{{"b", b.entries}, {"a", b.recovered_a_string()}});
                    });
                    emit_json(out, json{{"kind", "b"},
                                        {"degree", strings_opt.m},
                                        {"length", strings_opt.n},
                                        {"count", std::to_string(count)},
                                        {"strings", std::move(arr)}});
                }
            } else {  // kind == "a": trace listing
                const Weight mu = parse_weight(strings_opt.mu);
                if (format == "text") {
                    print_traces(out, strings_opt.m, mu, cap);
                } else {
                    emit_json(out, json{{"kind", "a"},
                                        {"degree", strings_opt.m},
                                        {"mu", mu.str()},
                                        {"traces", traces_json(strings_opt.m, mu, cap)}});
                }
            }
            return kExitOk;
        }

        if (*h2_cmd) {
            require_not_csv(format);
            const Characteristic p(h2_opt.p);
            const Weight mu = parse_weight(h2_opt.mu);
            const auto [dim, witness] = h2_dim(mu, p);
            if (format == "text") {
                out << dim << '\n';
                if (dim != 0) {
                    out << "witness: p^" << witness.twist << " * (" << reason_name(witness.reason)
                        << ')';
                    if (witness.reason == H2Witness::Reason::PowerFamily)
                        out << ", e=" << witness.family_exponent;
                    out << '\n';
                }
            } else {
                json entry = result_entry(2, 0, mu, dim);
                entry["witness"] = json{{"reason", reason_name(witness.reason)},
                                        {"twist", witness.twist},
                                        {"family_exponent", witness.family_exponent}};
                emit_json(out, json{{"p", h2_opt.p}, {"results", json::array({entry})}});
            }
            return kExitOk;
        }

        if (*wall_cmd) {
            require_not_csv(format);
            const Characteristic p(wall_opt.p);
            const auto [w1, w2] = parse_weight_pair(wall_opt.weyl);
            const auto [s1, s2] = parse_weight_pair(wall_opt.simple);
            const DimCount dim =
                wall_reduce_sl3(engine, {w1, w2}, {s1, s2}, wall_opt.degree, p);
            if (format == "text")
                out << dim << '\n';
            else
                emit_json(out, json{{"p", wall_opt.p},
                                    {"results", json::array({result_entry(
                                                    wall_opt.degree, 2 * w2, 2 * s2, dim)})}});
            return kExitOk;
        }

        // verify
        if (format != "text")
            throw std::invalid_argument("verify only emits text output");
        std::vector<SuiteReport> reports;
        if (suite == "all")
            reports = verify_all(engine);
        else
            reports.push_back(run_verify_suite(suite, engine));
        std::size_t passed = 0, total = 0;
        for (const SuiteReport& report : reports) {
            for (const CheckResult& check : report.checks) {
                if (check.pass)
                    out << "[ ok ] " << check.name << ": " << check.actual << '\n';
                else
                    out << "[FAIL] " << check.name << ": expected " << check.expected << ", got "
                        << check.actual << '\n';
            }
            out << "suite " << report.suite << ": " << report.pass_count() << '/'
                << report.checks.size() << " checks passed\n";
            passed += report.pass_count();
            total += report.checks.size();
        }
        if (reports.size() > 1)
            out << "total: " << passed << '/' << total << " checks passed\n";
        return passed == total ? kExitOk : kExitMismatch;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace sl2ext
