// edc command line tool: builds tree/comb family graphs and their distance
// powers, runs the exact-distance and distance-band colorings with optional
// verification, evaluates closed-form bounds, constructs clique witnesses,
// profiles the color-class energy statistic, solves chromatic numbers on
// small explicit graphs, and sweeps parameter grids into CSV tables.
//
// Links only the public C API (edc.h).
//
// Exit codes: 0 success (including budget timeouts, which are flagged in the
// output), 1 usage or invalid parameters, 2 verification violations or a
// failed witness self-check, 3 refused as over the configured size limits,
// 4 unexpected errors.

#include "CLI11.hpp"
#include "edc.h"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitTooBig = 3;
constexpr int kExitError = 4;

int exit_code_for(int rc) {
    switch (rc) {
    case EDC_OK:
        return kExitOk;
    case EDC_EINVAL:
        return kExitUsage;
    case EDC_ETOOBIG:
        return kExitTooBig;
    case EDC_EVERIFY:
        return kExitViolation;
    default:
        return kExitError;
    }
}

[[noreturn]] void fail_rc(int rc) {
    std::fprintf(stderr, "error: %s\n", edc_last_error());
    std::exit(exit_code_for(rc));
}

void check(int rc) {
    if (rc != EDC_OK)
        fail_rc(rc);
}

[[noreturn]] void fail_usage(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::exit(kExitUsage);
}

std::string take(char* s) {
    std::string r = s == nullptr ? std::string() : std::string(s);
    edc_string_free(s);
    return r;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open %s for writing\n",
                     path.c_str());
        std::exit(kExitError);
    }
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) {
        std::fprintf(stderr, "error: short write to %s\n", path.c_str());
        std::exit(kExitError);
    }
}

// Human-facing status line; goes to stderr when the CSV body itself is on
// stdout so the two never interleave.
void status_line(const std::string& out_path, const std::string& line) {
    std::FILE* sink = out_path.empty() ? stderr : stdout;
    std::fprintf(sink, "%s\n", line.c_str());
}

struct Ctx {
    edc_ctx* p = nullptr;
    Ctx() {
        p = edc_ctx_new();
        if (p == nullptr) {
            std::fprintf(stderr, "error: cannot allocate context\n");
            std::exit(kExitError);
        }
    }
    ~Ctx() { edc_ctx_free(p); }
    Ctx(const Ctx&) = delete;
    Ctx& operator=(const Ctx&) = delete;
};

void apply_limits(Ctx& ctx, const std::vector<std::string>& limits) {
    for (const auto& spec : limits) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            fail_usage("--limit expects name=value, got: " + spec);
        const std::string name = spec.substr(0, eq);
        const std::string value = spec.substr(eq + 1);
        char* end = nullptr;
        const long long v = std::strtoll(value.c_str(), &end, 10);
        if (end == value.c_str() || *end != '\0')
            fail_usage("--limit value must be an integer, got: " + spec);
        check(edc_ctx_set_limit(ctx.p, name.c_str(), v));
    }
}

// Exact fraction "p" or "p/r"; used only where the CLI itself needs the
// numeric value (band caps, sweep bounds). Construction parsing and
// validation happen inside the library.
void parse_fraction(const std::string& text, std::int64_t* num,
                    std::int64_t* den) {
    const auto slash = text.find('/');
    const std::string ns = slash == std::string::npos
                               ? text
                               : text.substr(0, slash);
    const std::string ds = slash == std::string::npos
                               ? std::string("1")
                               : text.substr(slash + 1);
    char* end = nullptr;
    const long long n = std::strtoll(ns.c_str(), &end, 10);
    if (end == ns.c_str() || *end != '\0')
        fail_usage("c must be an exact fraction p or p/r, got: " + text);
    const long long d = std::strtoll(ds.c_str(), &end, 10);
    if (end == ds.c_str() || *end != '\0' || d <= 0 || n <= 0)
        fail_usage("c must be an exact positive fraction, got: " + text);
    *num = n;
    *den = d;
}

std::int64_t floor_frac_times(std::int64_t num, std::int64_t den,
                              std::int64_t m) {
    return (num * m) / den;
}

std::string seed_header(std::uint64_t seed) {
    std::ostringstream s;
    s << "# seed: " << seed << "\n";
    return s.str();
}

// ---------- graph family construction ----------

struct GraphHandle {
    edc_graph* p = nullptr;
    ~GraphHandle() { edc_graph_free(p); }
    GraphHandle() = default;
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
};

void make_family(Ctx& ctx, const std::string& family, int q, int depth,
                 GraphHandle& out) {
    if (family == "tq") {
        check(edc_graph_tree(ctx.p, q, q, depth, &out.p));
        return;
    }
    if (family == "tqd") {
        check(edc_graph_tree(ctx.p, q, q - 1, depth, &out.p));
        return;
    }
    if (q != 3)
        fail_usage("family " + family + " is defined for q=3 only");
    if (family == "p3") {
        check(edc_graph_comb(ctx.p, depth, &out.p));
        return;
    }
    if (family == "u3") {
        GraphHandle base;
        check(edc_graph_tree(ctx.p, 3, 2, depth, &base.p));
        check(edc_graph_sibling_closure(ctx.p, base.p, &out.p));
        return;
    }
    if (family == "q3") {
        GraphHandle base;
        check(edc_graph_comb(ctx.p, depth, &base.p));
        check(edc_graph_sibling_closure(ctx.p, base.p, &out.p));
        return;
    }
    fail_usage("unknown family: " + family);
}

std::string export_graph(const GraphHandle& g, const std::string& format,
                         std::uint64_t seed) {
    char* text = nullptr;
    if (format == "dimacs") {
        check(edc_graph_to_dimacs(g.p, &text));
        std::ostringstream s;
        s << "c seed: " << seed << "\n";
        return s.str() + take(text);
    }
    if (format == "csv") {
        check(edc_graph_to_edge_csv(g.p, &text));
        return seed_header(seed) + take(text);
    }
    fail_usage("unknown export format: " + format);
}

// ---------- verification plumbing shared by the color commands ----------

struct VerifyOutcome {
    bool ran = false;
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    std::string mode;
};

VerifyOutcome run_verify(Ctx& ctx, edc_coloring* col, int d, int cap,
                         const std::string& mode, std::uint64_t samples,
                         std::uint64_t seed, const std::string& report_path) {
    VerifyOutcome out;
    if (mode.empty())
        return out;
    const int full = mode == "full" ? 1 : 0;
    edc_report* rep = nullptr;
    check(edc_verify_tree(ctx.p, col, d, cap, full, samples, seed, &rep));
    out.ran = true;
    out.mode = mode;
    check(edc_report_counts(rep, &out.pairs, &out.violations));
    if (!report_path.empty()) {
        char* text = nullptr;
        const int rc = edc_report_csv(rep, &text);
        if (rc != EDC_OK) {
            edc_report_free(rep);
            fail_rc(rc);
        }
        write_output(report_path, seed_header(seed) + take(text));
    }
    edc_report_free(rep);
    return out;
}

std::string summary_csv(std::uint64_t seed, const std::string& kind,
                        const std::vector<std::pair<std::string, std::string>>&
                            rows) {
    std::ostringstream s;
    s << seed_header(seed);
    s << "# summary: " << kind << "\n";
    s << "key,value\n";
    for (const auto& [k, v] : rows)
        s << k << ',' << v << '\n';
    return s.str();
}

std::string verify_cell(const VerifyOutcome& v) {
    if (!v.ran)
        return "none";
    if (v.violations == 0)
        return "ok";
    return "violations=" + std::to_string(v.violations);
}

// ---------- bounds CSV parsing (sweep needs a few named values) ----------

struct BoundsTable {
    // name -> (kind, value)
    std::map<std::string, std::pair<std::string, double>> rows;
    double max_lower = 0;
    bool has_lower = false;
};

BoundsTable parse_bounds_csv(const std::string& text) {
    BoundsTable t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("name,", 0) == 0)
            continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            const auto comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
        const auto comma = line.find(',', pos);
        fields.push_back(line.substr(pos, comma - pos));
        const std::string& name = fields[0];
        const std::string& kind = fields[1];
        const double value = std::strtod(fields[3].c_str(), nullptr);
        t.rows[name] = {kind, value};
        if (kind == "lower") {
            if (!t.has_lower || value > t.max_lower)
                t.max_lower = value;
            t.has_lower = true;
        }
    }
    return t;
}

// ---------- subcommand runners ----------

struct CommonOpts {
    std::string out;
    std::uint64_t seed = 12345;
    std::vector<std::string> limits;
};

int run_build(Ctx& ctx, const CommonOpts& common, const std::string& family,
              int q, int depth, const std::string& format) {
    GraphHandle g;
    make_family(ctx, family, q, depth, g);
    write_output(common.out, export_graph(g, format, common.seed));
    return kExitOk;
}

int run_power(Ctx& ctx, const CommonOpts& common, const std::string& family,
              int q, int depth, const std::string& in_path, int exact_d,
              const std::vector<int>& band, const std::string& format) {
    GraphHandle base;
    if (!in_path.empty()) {
        std::ifstream f(in_path, std::ios::binary);
        if (!f)
            fail_usage("cannot read " + in_path);
        std::ostringstream buf;
        buf << f.rdbuf();
        check(edc_graph_from_dimacs(ctx.p, buf.str().c_str(), &base.p));
    } else if (!family.empty()) {
        make_family(ctx, family, q, depth, base);
    } else {
        fail_usage("power needs either --family or --in");
    }
    int d = 0;
    int cap = 0;
    if (exact_d > 0 && !band.empty())
        fail_usage("power takes exactly one of --exact and --band");
    if (exact_d > 0) {
        d = exact_d;
        cap = exact_d;
    } else if (band.size() == 2) {
        d = band[0];
        cap = band[1];
    } else {
        fail_usage("power takes exactly one of --exact and --band");
    }
    GraphHandle pw;
    check(edc_graph_power(ctx.p, base.p, d, cap, &pw.p));
    write_output(common.out, export_graph(pw, format, common.seed));
    return kExitOk;
}

struct ColoringHandle {
    edc_coloring* p = nullptr;
    ~ColoringHandle() { edc_coloring_free(p); }
    ColoringHandle() = default;
    ColoringHandle(const ColoringHandle&) = delete;
    ColoringHandle& operator=(const ColoringHandle&) = delete;
};

int run_color_exact(Ctx& ctx, const CommonOpts& common, int q, int d, int k,
                    int depth, const std::string& verify,
                    std::uint64_t samples, const std::string& report,
                    bool summary_only) {
    ColoringHandle col;
    check(edc_color_blocks(ctx.p, q, q, depth, d, k, &col.p));
    std::uint32_t palette = 0;
    check(edc_coloring_palette(col.p, &palette));
    const VerifyOutcome v =
        run_verify(ctx, col.p, d, d, verify, samples, common.seed, report);

    int k_eff = k;
    if (k_eff <= 0)
        check(edc_choose_block_length(q, d, &k_eff));

    if (summary_only) {
        write_output(common.out,
                     summary_csv(common.seed, "color-exact",
                                 {{"q", std::to_string(q)},
                                  {"d", std::to_string(d)},
                                  {"k", std::to_string(k_eff)},
                                  {"depth", std::to_string(depth)},
                                  {"palette_size", std::to_string(palette)},
                                  {"verify_mode", v.ran ? v.mode : "none"},
                                  {"pairs_checked", std::to_string(v.pairs)},
                                  {"violations",
                                   std::to_string(v.violations)}}));
    } else {
        char* text = nullptr;
        check(edc_coloring_csv(col.p, &text));
        write_output(common.out, seed_header(common.seed) + take(text));
    }
    status_line(common.out, "palette=" + std::to_string(palette) +
                                " verify=" + verify_cell(v));
    return v.violations > 0 ? kExitViolation : kExitOk;
}

int run_color_interval(Ctx& ctx, const CommonOpts& common, int q, int d,
                       const std::string& c, int depth,
                       const std::string& verify, std::uint64_t samples,
                       const std::string& report, bool edges,
                       bool summary_only) {
    ColoringHandle col;
    check(edc_color_interval(ctx.p, q, q, depth, d, c.c_str(), &col.p));
    std::uint32_t palette = 0;
    check(edc_coloring_palette(col.p, &palette));

    std::int64_t num = 0;
    std::int64_t den = 1;
    parse_fraction(c, &num, &den);
    const int cap = static_cast<int>(floor_frac_times(num, den, d));

    const VerifyOutcome v =
        run_verify(ctx, col.p, d, cap, verify, samples, common.seed, report);

    if (summary_only) {
        write_output(common.out,
                     summary_csv(common.seed, "color-interval",
                                 {{"q", std::to_string(q)},
                                  {"d", std::to_string(d)},
                                  {"c", c},
                                  {"cap", std::to_string(cap)},
                                  {"depth", std::to_string(depth)},
                                  {"palette_size", std::to_string(palette)},
                                  {"verify_mode", v.ran ? v.mode : "none"},
                                  {"pairs_checked", std::to_string(v.pairs)},
                                  {"violations",
                                   std::to_string(v.violations)}}));
    } else {
        char* text = nullptr;
        if (edges)
            check(edc_coloring_edge_csv(col.p, &text));
        else
            check(edc_coloring_csv(col.p, &text));
        write_output(common.out, seed_header(common.seed) + take(text));
    }
    status_line(common.out, "palette=" + std::to_string(palette) +
                                " band=" + std::to_string(d) + ".." +
                                std::to_string(cap) +
                                " verify=" + verify_cell(v));
    return v.violations > 0 ? kExitViolation : kExitOk;
}

int run_parity(Ctx& ctx, const CommonOpts& common, int q, int d, int depth,
               const std::string& verify, std::uint64_t samples,
               const std::string& report, bool summary_only) {
    if (d % 2 == 0)
        fail_usage("parity coloring is proper for odd distances only");
    ColoringHandle col;
    check(edc_color_parity(ctx.p, q, q, depth, &col.p));
    std::uint32_t palette = 0;
    check(edc_coloring_palette(col.p, &palette));
    const VerifyOutcome v =
        run_verify(ctx, col.p, d, d, verify, samples, common.seed, report);
    if (summary_only) {
        write_output(common.out,
                     summary_csv(common.seed, "parity",
                                 {{"q", std::to_string(q)},
                                  {"d", std::to_string(d)},
                                  {"depth", std::to_string(depth)},
                                  {"palette_size", std::to_string(palette)},
                                  {"verify_mode", v.ran ? v.mode : "none"},
                                  {"pairs_checked", std::to_string(v.pairs)},
                                  {"violations",
                                   std::to_string(v.violations)}}));
    } else {
        char* text = nullptr;
        check(edc_coloring_csv(col.p, &text));
        write_output(common.out, seed_header(common.seed) + take(text));
    }
    status_line(common.out, "palette=" + std::to_string(palette) +
                                " verify=" + verify_cell(v));
    return v.violations > 0 ? kExitViolation : kExitOk;
}

int run_chi(Ctx& ctx, const CommonOpts& common, const std::string& in_path,
            std::uint64_t max_nodes, double max_seconds,
            const std::string& coloring_out, const std::string& clique_out) {
    std::ifstream f(in_path, std::ios::binary);
    if (!f)
        fail_usage("cannot read " + in_path);
    std::ostringstream buf;
    buf << f.rdbuf();
    GraphHandle g;
    check(edc_graph_from_dimacs(ctx.p, buf.str().c_str(), &g.p));
    std::int64_t n = 0;
    std::int64_t m = 0;
    check(edc_graph_counts(g.p, &n, &m));

    edc_chi_result* r = nullptr;
    check(edc_chi_solve(ctx.p, g.p, max_nodes, max_seconds, &r));
    int chi = 0;
    int clique_lb = 0;
    int dsatur_ub = 0;
    std::uint64_t nodes = 0;
    int timed_out = 0;
    check(edc_chi_values(r, &chi, &clique_lb, &dsatur_ub, &nodes,
                         &timed_out));
    if (!coloring_out.empty()) {
        char* text = nullptr;
        check(edc_chi_coloring_csv(r, &text));
        write_output(coloring_out, seed_header(common.seed) + take(text));
    }
    if (!clique_out.empty()) {
        char* text = nullptr;
        check(edc_chi_clique_csv(r, &text));
        write_output(clique_out, seed_header(common.seed) + take(text));
    }
    edc_chi_result_free(r);

    write_output(common.out,
                 summary_csv(common.seed, "chi",
                             {{"n", std::to_string(n)},
                              {"edges", std::to_string(m)},
                              {"chi", std::to_string(chi)},
                              {"clique_lb", std::to_string(clique_lb)},
                              {"dsatur_ub", std::to_string(dsatur_ub)},
                              {"nodes", std::to_string(nodes)},
                              {"timed_out", std::to_string(timed_out)}}));
    status_line(common.out,
                "chi=" + std::to_string(chi) +
                    (timed_out ? " (timed out: upper bound only)" : ""));
    return kExitOk;
}

int run_bounds(Ctx& ctx, const CommonOpts& common, int q, int d,
               const std::string& c) {
    char* text = nullptr;
    if (c.empty())
        check(edc_bounds_exact_csv(ctx.p, q, d, &text));
    else
        check(edc_bounds_interval_csv(ctx.p, q, d, c.c_str(), &text));
    write_output(common.out, seed_header(common.seed) + take(text));
    return kExitOk;
}

int run_witness(Ctx& ctx, const CommonOpts& common, bool exact,
                bool interval, int q, int d, const std::string& c) {
    if (exact == interval)
        fail_usage("witness takes exactly one of --exact and --interval");
    char* text = nullptr;
    if (exact) {
        check(edc_witness_exact_csv(ctx.p, q, d, &text));
    } else {
        if (c.empty())
            fail_usage("--interval requires --c");
        check(edc_witness_interval_csv(ctx.p, q, d, c.c_str(), &text));
    }
    write_output(common.out, seed_header(common.seed) + take(text));
    return kExitOk;
}

int run_energy(Ctx& ctx, const CommonOpts& common, int q, int d, int k,
               std::int64_t color, std::uint64_t samples) {
    ColoringHandle col;
    check(edc_color_blocks(ctx.p, q, q, d, d, k, &col.p));
    char* text = nullptr;
    check(edc_energy_csv(ctx.p, col.p, d, color, samples, common.seed,
                         &text));
    write_output(common.out, seed_header(common.seed) + take(text));
    return kExitOk;
}

// ---------- sweep ----------

struct GridSpec {
    std::vector<int> qs;
    std::vector<int> ds;
    std::vector<std::string> cs; // may be empty
    std::vector<int> ks;         // 0 = auto
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

GridSpec parse_grid(const std::string& spec) {
    GridSpec g;
    for (const auto& part : split(spec, ';')) {
        if (part.empty())
            continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            fail_usage("grid entries look like key=v1,v2 — got: " + part);
        const std::string key = part.substr(0, eq);
        const auto values = split(part.substr(eq + 1), ',');
        if (key == "c") {
            g.cs = values;
            continue;
        }
        std::vector<int> nums;
        for (const auto& v : values) {
            if (key == "k" && v == "auto") {
                nums.push_back(0);
                continue;
            }
            char* end = nullptr;
            const long n = std::strtol(v.c_str(), &end, 10);
            if (end == v.c_str() || *end != '\0')
                fail_usage("grid value for " + key +
                           " must be an integer, got: " + v);
            nums.push_back(static_cast<int>(n));
        }
        if (key == "q")
            g.qs = nums;
        else if (key == "d")
            g.ds = nums;
        else if (key == "k")
            g.ks = nums;
        else
            fail_usage("unknown grid key: " + key);
    }
    if (g.qs.empty() || g.ds.empty())
        fail_usage("grid must list at least q=... and d=...");
    if (g.ks.empty())
        g.ks.push_back(0);
    return g;
}

// One sweep point: the exact-distance construction (block coloring for even
// d, depth-parity for odd d), the band construction when a c is given, the
// matching closed-form bounds, sampled verification, and the exact solver on
// the materialized power graph when it is small enough.
struct SweepRow {
    std::string text;
    std::uint64_t violations = 0;
};

SweepRow sweep_point(Ctx& ctx, int q, int d, const std::string& c, int k,
                     std::uint64_t samples, std::uint64_t seed,
                     std::int64_t chi_max_n, std::uint64_t budget_nodes,
                     double budget_seconds) {
    SweepRow row;
    std::ostringstream s;
    const bool even = d % 2 == 0;

    std::string palette_cell;
    std::string bound_cell;
    std::string verify_exact_cell = "skipped";
    std::string lower_cell;
    int k_eff = k;

    {
        char* text = nullptr;
        check(edc_bounds_exact_csv(ctx.p, q, d, &text));
        const BoundsTable bounds = parse_bounds_csv(take(text));
        if (bounds.has_lower) {
            std::ostringstream b;
            b.precision(12);
            b << bounds.max_lower;
            lower_cell = b.str();
        }
    }

    ColoringHandle col;
    int rc;
    if (even) {
        if (k_eff <= 0)
            check(edc_choose_block_length(q, d, &k_eff));
        rc = edc_color_blocks(ctx.p, q, q, d, d, k_eff, &col.p);
    } else {
        rc = edc_color_parity(ctx.p, q, q, d, &col.p);
    }
    if (rc == EDC_ETOOBIG) {
        palette_cell = "";
        verify_exact_cell = "skipped";
    } else {
        check(rc);
        std::uint32_t palette = 0;
        check(edc_coloring_palette(col.p, &palette));
        palette_cell = std::to_string(palette);
        if (even) {
            // (q-1)^k + (q-1)^floor(k/2) + ceil(d/k) + 1
            std::int64_t e1 = 1;
            for (int i = 0; i < k_eff; ++i)
                e1 *= q - 1;
            std::int64_t e2 = 1;
            for (int i = 0; i < k_eff / 2; ++i)
                e2 *= q - 1;
            bound_cell =
                std::to_string(e1 + e2 + (d + k_eff - 1) / k_eff + 1);
        } else {
            bound_cell = "2";
        }
        edc_report* rep = nullptr;
        rc = edc_verify_tree(ctx.p, col.p, d, d, 0, samples, seed, &rep);
        if (rc == EDC_OK) {
            std::uint64_t pairs = 0;
            std::uint64_t viol = 0;
            check(edc_report_counts(rep, &pairs, &viol));
            edc_report_free(rep);
            row.violations += viol;
            verify_exact_cell =
                viol == 0 ? "ok" : "violations=" + std::to_string(viol);
        } else if (rc == EDC_ETOOBIG) {
            verify_exact_cell = "skipped";
        } else {
            check(rc);
        }
    }

    std::string int_palette_cell;
    std::string int_bound_cell;
    std::string verify_int_cell = c.empty() ? "none" : "skipped";
    if (!c.empty() && even) {
        std::int64_t num = 0;
        std::int64_t den = 1;
        parse_fraction(c, &num, &den);
        const std::int64_t cap = floor_frac_times(num, den, d);
        const std::int64_t half = (num * d) / (2 * den);
        const std::int64_t ell = half - d / 2;
        const int depth = static_cast<int>(half + 1);
        ColoringHandle icol;
        rc = edc_color_interval(ctx.p, q, q, depth, d, c.c_str(), &icol.p);
        if (rc == EDC_ETOOBIG) {
            int_palette_cell = "";
        } else {
            check(rc);
            std::uint32_t palette = 0;
            check(edc_coloring_palette(icol.p, &palette));
            int_palette_cell = std::to_string(palette);
            double pw = 1;
            for (std::int64_t i = 0; i < ell + 1; ++i)
                pw *= q - 1;
            const double bound =
                static_cast<double>(q) / (q - 2) * pw +
                static_cast<double>(cap) + 1;
            std::ostringstream b;
            b.precision(12);
            b << bound;
            int_bound_cell = b.str();
            edc_report* rep = nullptr;
            rc = edc_verify_tree(ctx.p, icol.p, d, static_cast<int>(cap), 0,
                                 samples, seed, &rep);
            if (rc == EDC_OK) {
                std::uint64_t pairs = 0;
                std::uint64_t viol = 0;
                check(edc_report_counts(rep, &pairs, &viol));
                edc_report_free(rep);
                row.violations += viol;
                verify_int_cell =
                    viol == 0 ? "ok" : "violations=" + std::to_string(viol);
            } else if (rc == EDC_ETOOBIG) {
                verify_int_cell = "skipped";
            } else {
                check(rc);
            }
        }
    }

    std::string chi_cell;
    std::string chi_status = "skipped";
    {
        // Materialize the depth-d truncation and its exact power only when
        // small enough for the solver budget.
        std::int64_t n = 1;
        std::int64_t level = 1;
        for (int t = 1; t <= d; ++t) {
            level *= (t == 1) ? q : q - 1;
            n += level;
            if (n > chi_max_n)
                break;
        }
        if (n <= chi_max_n && d >= 1) {
            GraphHandle tree;
            check(edc_graph_tree(ctx.p, q, q, d, &tree.p));
            GraphHandle pw;
            check(edc_graph_power(ctx.p, tree.p, d, d, &pw.p));
            edc_chi_result* r = nullptr;
            check(edc_chi_solve(ctx.p, pw.p, budget_nodes, budget_seconds,
                                &r));
            int chi = 0;
            int timed_out = 0;
            check(edc_chi_values(r, &chi, nullptr, nullptr, nullptr,
                                 &timed_out));
            edc_chi_result_free(r);
            chi_cell = std::to_string(chi);
            chi_status = timed_out ? "timed_out" : "exact";
        }
    }

    s << q << ',' << d << ',' << c << ','
      << (even ? std::to_string(k_eff) : std::string()) << ','
      << palette_cell << ',' << bound_cell << ',' << lower_cell << ','
      << verify_exact_cell << ',' << int_palette_cell << ','
      << int_bound_cell << ',' << verify_int_cell << ',' << chi_cell << ','
      << chi_status << '\n';
    row.text = s.str();
    return row;
}

int run_sweep(Ctx& ctx, const CommonOpts& common, const std::string& grid,
              std::uint64_t samples, std::int64_t chi_max_n,
              std::uint64_t budget_nodes, double budget_seconds) {
    const GridSpec g = parse_grid(grid);
    std::ostringstream s;
    s << seed_header(common.seed);
    s << "# sweep: " << grid << "\n";
    s << "# samples: " << samples << "\n";
    s << "q,d,c,k,palette,palette_bound,lower_bound,verify,"
         "interval_palette,interval_bound,interval_verify,chi,chi_status\n";
    std::uint64_t violations = 0;
    std::vector<std::string> cs = g.cs;
    if (cs.empty())
        cs.push_back("");
    for (const int q : g.qs)
        for (const int d : g.ds)
            for (const std::string& c : cs)
                for (const int k : g.ks) {
                    const SweepRow row =
                        sweep_point(ctx, q, d, c, k, samples, common.seed,
                                    chi_max_n, budget_nodes, budget_seconds);
                    s << row.text;
                    violations += row.violations;
                }
    write_output(common.out, s.str());
    status_line(common.out,
                violations == 0
                    ? std::string("sweep ok")
                    : "sweep violations=" + std::to_string(violations));
    return violations > 0 ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-distance and distance-band colorings of regular trees: "
        "family graphs, distance powers, constructive colorings with "
        "verification, closed-form bounds, clique witnesses, color-class "
        "energy profiles, and an exact chromatic-number solver."};
    app.require_subcommand(1);

    // Shared option storage. Each subcommand binds the subset it uses.
    CommonOpts common;
    std::string family;
    int q = 3;
    int d = 0;
    int k = 0;
    int depth = 0;
    std::string c;
    std::string verify;
    std::uint64_t samples = 2000;
    std::string report;
    bool summary_only = false;
    std::string format = "dimacs";
    std::string in_path;
    int exact_d = 0;
    std::vector<int> band;
    std::uint64_t max_nodes = 0;
    double max_seconds = 0;
    std::string coloring_out;
    std::string clique_out;
    bool w_exact = false;
    bool w_interval = false;
    std::int64_t color = -1;
    std::string grid;
    std::int64_t chi_max_n = 300;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out,
                        "Write the primary output to this file (stdout "
                        "otherwise)");
        sub->add_option("--seed", common.seed,
                        "Seed recorded in output headers and used for all "
                        "randomized steps");
        sub->add_option("--limit", common.limits,
                        "Override a size limit, name=value (repeatable): "
                        "graph_vertices, distance_vertices, color_entries, "
                        "scan_work");
    };

    CLI::App* cb = app.add_subcommand(
        "build", "Materialize a family graph and export it");
    cb->add_option("--family", family,
                   "tq (root degree q), tqd (root degree q-1), p3 (comb), "
                   "u3 (tqd plus sibling edges), q3 (comb plus sibling "
                   "edges)")
        ->required();
    cb->add_option("--q", q, "Tree degree (q-regular; q >= 3)");
    cb->add_option("--depth", depth, "Truncation depth / comb length")
        ->required();
    cb->add_option("--export", format, "dimacs or csv");
    add_common(cb);

    CLI::App* cp = app.add_subcommand(
        "power", "Export the exact or banded distance power of a graph");
    cp->add_option("--family", family, "Family to build (see build)");
    cp->add_option("--q", q, "Tree degree");
    cp->add_option("--depth", depth, "Truncation depth / comb length");
    cp->add_option("--in", in_path, "Read a DIMACS graph instead");
    cp->add_option("--exact", exact_d, "Join pairs at distance exactly d");
    cp->add_option("--band", band,
                   "Join pairs at distance within [d, cap]")
        ->expected(2);
    cp->add_option("--export", format, "dimacs or csv");
    add_common(cp);

    CLI::App* ce = app.add_subcommand(
        "color-exact",
        "Block-greedy coloring proper for exact distance d (even)");
    ce->add_option("--q", q, "Tree degree")->required();
    ce->add_option("--d", d, "Exact distance (even, >= 2)")->required();
    ce->add_option("--k", k, "Block length (omit or 0: automatic)");
    ce->add_option("--depth", depth, "Truncation depth")->required();
    ce->add_option("--verify", verify, "full or sampled")
        ->check(CLI::IsMember({"full", "sampled"}));
    ce->add_option("--samples", samples, "Sample count for sampled mode");
    ce->add_option("--report", report, "Write the verification report here");
    ce->add_flag("--summary-only", summary_only,
                 "Write a key,value summary instead of the full coloring");
    add_common(ce);

    CLI::App* ci = app.add_subcommand(
        "color-interval",
        "Lifted edge coloring proper for the distance band [d, floor(c*d)]");
    ci->add_option("--q", q, "Tree degree")->required();
    ci->add_option("--d", d, "Band lower end (even, >= 2)")->required();
    ci->add_option("--c", c, "Band stretch as an exact fraction p/r > 1")
        ->required();
    ci->add_option("--depth", depth, "Truncation depth")->required();
    ci->add_option("--verify", verify, "full or sampled")
        ->check(CLI::IsMember({"full", "sampled"}));
    ci->add_option("--samples", samples, "Sample count for sampled mode");
    ci->add_option("--report", report, "Write the verification report here");
    bool edges = false;
    ci->add_flag("--edges", edges,
                 "Export the underlying edge coloring instead of vertex "
                 "colors");
    ci->add_flag("--summary-only", summary_only,
                 "Write a key,value summary instead of the full coloring");
    add_common(ci);

    CLI::App* cpar = app.add_subcommand(
        "parity", "Depth-parity coloring, proper for any odd distance");
    cpar->add_option("--q", q, "Tree degree")->required();
    cpar->add_option("--d", d, "Odd distance to verify against")->required();
    cpar->add_option("--depth", depth, "Truncation depth")->required();
    cpar->add_option("--verify", verify, "full or sampled")
        ->check(CLI::IsMember({"full", "sampled"}));
    cpar->add_option("--samples", samples, "Sample count for sampled mode");
    cpar->add_option("--report", report,
                     "Write the verification report here");
    cpar->add_flag("--summary-only", summary_only,
                   "Write a key,value summary instead of the full coloring");
    add_common(cpar);

    CLI::App* cchi = app.add_subcommand(
        "chi", "Exact chromatic number of a small DIMACS graph");
    cchi->add_option("--in", in_path, "DIMACS file")->required();
    cchi->add_option("--max-nodes", max_nodes,
                     "Search node budget (0: default)");
    cchi->add_option("--max-seconds", max_seconds,
                     "Time budget in seconds (0: default)");
    cchi->add_option("--coloring-out", coloring_out,
                     "Write the optimal coloring here");
    cchi->add_option("--clique-out", clique_out,
                     "Write the greedy clique here");
    add_common(cchi);

    CLI::App* cbounds = app.add_subcommand(
        "bounds", "Closed-form chromatic bounds for the tree families");
    cbounds->add_option("--q", q, "Tree degree")->required();
    cbounds->add_option("--d", d, "Distance")->required();
    cbounds->add_option("--c", c,
                        "Band stretch p/r; when given, emit the band bounds "
                        "instead of the exact-distance bounds");
    add_common(cbounds);

    CLI::App* cw = app.add_subcommand(
        "witness", "Construct and self-check a clique witness");
    cw->add_flag("--exact", w_exact, "Pairwise distance exactly d");
    cw->add_flag("--interval", w_interval,
                 "Pairwise distance within [d, 2*floor(c*d/2)]");
    cw->add_option("--q", q, "Tree degree")->required();
    cw->add_option("--d", d, "Distance (even)")->required();
    cw->add_option("--c", c, "Band stretch p/r (interval witness)");
    add_common(cw);

    CLI::App* cen = app.add_subcommand(
        "energy",
        "Random-walk energy profile of a color class of the block coloring");
    cen->add_option("--q", q, "Tree degree")->required();
    cen->add_option("--d", d, "Exact distance (even); also the walk depth")
        ->required();
    cen->add_option("--k", k, "Block length (omit or 0: automatic)");
    cen->add_option("--color", color,
                    "Color class to profile (-1: the most frequent class)");
    cen->add_option("--samples", samples, "Number of random walks");
    add_common(cen);

    CLI::App* csw = app.add_subcommand(
        "sweep",
        "Cartesian parameter sweep; one CSV row per point with palettes, "
        "bounds, sampled verification, and solver results where feasible");
    csw->add_option("--grid", grid,
                    "Semicolon-separated lists, e.g. "
                    "\"q=3,4;d=2,4,6;c=3/2;k=auto\"")
        ->required();
    csw->add_option("--samples", samples,
                    "Samples per verification (default 2000)");
    csw->add_option("--chi-max-n", chi_max_n,
                    "Run the exact solver only when the power graph has at "
                    "most this many vertices");
    csw->add_option("--max-nodes", max_nodes,
                    "Solver node budget per point (0: default)");
    csw->add_option("--max-seconds", max_seconds,
                    "Solver time budget per point (0: default)");
    add_common(csw);

    CLI11_PARSE(app, argc, argv);

    Ctx ctx;
    apply_limits(ctx, common.limits);

    if (*cb)
        return run_build(ctx, common, family, q, depth, format);
    if (*cp)
        return run_power(ctx, common, family, q, depth, in_path, exact_d,
                         band, format);
    if (*ce)
        return run_color_exact(ctx, common, q, d, k, depth, verify, samples,
                               report, summary_only);
    if (*ci)
        return run_color_interval(ctx, common, q, d, c, depth, verify,
                                  samples, report, edges, summary_only);
    if (*cpar)
        return run_parity(ctx, common, q, d, depth, verify, samples, report,
                          summary_only);
    if (*cchi)
        return run_chi(ctx, common, in_path, max_nodes, max_seconds,
                       coloring_out, clique_out);
    if (*cbounds)
        return run_bounds(ctx, common, q, d, c);
    if (*cw)
        return run_witness(ctx, common, w_exact, w_interval, q, d, c);
    if (*cen)
        return run_energy(ctx, common, q, d, k, color, samples);
    if (*csw) {
        double budget_seconds = max_seconds > 0 ? max_seconds : 10.0;
        std::uint64_t budget_nodes = max_nodes > 0 ? max_nodes : 1000000;
        return run_sweep(ctx, common, grid, samples, chi_max_n, budget_nodes,
                         budget_seconds);
    }
    return kExitUsage;
}
