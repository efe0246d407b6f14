#include "edc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/block_coloring.hpp"
#include "core/bounds.hpp"
#include "core/chi.hpp"
#include "core/coloring.hpp"
#include "core/energy.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/interval_coloring.hpp"
#include "core/limits.hpp"
#include "core/rational.hpp"
#include "core/tree.hpp"
#include "core/verify.hpp"
#include "core/witness.hpp"

struct edc_ctx {
    edc::Limits limits;
};

struct edc_graph {
    edc::FiniteGraph g;
};

struct edc_coloring {
    std::unique_ptr<edc::TreeColoring> col;
    edc::Limits limits; // snapshot of the creating context's limits
    int kind = 0;       // 0 = block, 1 = interval, 2 = parity
};

struct edc_report {
    edc::VerifyReport rep;
};

struct edc_chi_result {
    edc::ChiResult res;
    std::vector<std::string> labels;
};

namespace {

thread_local std::string t_last_error;

int fail(int code, const std::string& msg) {
    t_last_error = msg;
    return code;
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const edc::TooLargeError& e) {
        return fail(EDC_ETOOBIG, e.what());
    } catch (const edc::VerifyError& e) {
        return fail(EDC_EVERIFY, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(EDC_EINVAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EDC_ENOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(EDC_EINTERNAL, e.what());
    } catch (...) {
        return fail(EDC_EINTERNAL, "unknown error");
    }
}

int out_string(const std::string& s, char** out) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p == nullptr)
        return fail(EDC_ENOMEM, "out of memory");
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
    return EDC_OK;
}

int need(bool cond, const char* what) {
    if (cond)
        return EDC_OK;
    return fail(EDC_EINVAL, std::string("null argument: ") + what);
}

} // namespace

extern "C" {

const char* edc_version(void) { return "0.1.0"; }

const char* edc_last_error(void) { return t_last_error.c_str(); }

void edc_string_free(char* s) { std::free(s); }

edc_ctx* edc_ctx_new(void) {
    try {
        return new edc_ctx{};
    } catch (...) {
        return nullptr;
    }
}

void edc_ctx_free(edc_ctx* ctx) { delete ctx; }

int edc_ctx_set_limit(edc_ctx* ctx, const char* name, int64_t value) {
    if (need(ctx != nullptr, "ctx") || need(name != nullptr, "name"))
        return EDC_EINVAL;
    if (value <= 0)
        return fail(EDC_EINVAL, "limit value must be positive");
    const std::string n = name;
    if (n == "graph_vertices")
        ctx->limits.graph_vertices = value;
    else if (n == "distance_vertices")
        ctx->limits.distance_vertices = value;
    else if (n == "color_entries")
        ctx->limits.color_entries = value;
    else if (n == "scan_work")
        ctx->limits.scan_work = value;
    else
        return fail(EDC_EINVAL, "unknown limit name: " + n);
    return EDC_OK;
}

/* ---- graphs ---- */

int edc_graph_tree(edc_ctx* ctx, int q, int root_arity, int depth,
                   edc_graph** out) {
    if (need(ctx != nullptr, "ctx") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        edc::Tree tree(q, root_arity, depth);
        auto h = std::make_unique<edc_graph>();
        h->g = edc::build_tree_graph(tree, ctx->limits);
        *out = h.release();
        return EDC_OK;
    });
}

int edc_graph_comb(edc_ctx* ctx, int d, edc_graph** out) {
    if (need(ctx != nullptr, "ctx") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        auto h = std::make_unique<edc_graph>();
        h->g = edc::build_comb_graph(d, ctx->limits);
        *out = h.release();
        return EDC_OK;
    });
}

int edc_graph_sibling_closure(edc_ctx* ctx, const edc_graph* base,
                              edc_graph** out) {
    if (need(ctx != nullptr, "ctx") || need(base != nullptr, "base") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        auto h = std::make_unique<edc_graph>();
        h->g = edc::sibling_closure(base->g);
        *out = h.release();
        return EDC_OK;
    });
}

int edc_graph_power(edc_ctx* ctx, const edc_graph* base, int d, int cap,
                    edc_graph** out) {
    if (need(ctx != nullptr, "ctx") || need(base != nullptr, "base") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        auto h = std::make_unique<edc_graph>();
        h->g = edc::band_power(base->g, d, cap, ctx->limits);
        *out = h.release();
        return EDC_OK;
    });
}

int edc_graph_counts(const edc_graph* g, int64_t* vertices, int64_t* edges) {
    if (need(g != nullptr, "g"))
        return EDC_EINVAL;
    if (vertices != nullptr)
        *vertices = g->g.n;
    if (edges != nullptr)
        *edges = static_cast<int64_t>(g->g.edges.size());
    return EDC_OK;
}

int edc_graph_to_dimacs(const edc_graph* g, char** out) {
    if (need(g != nullptr, "g") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int { return out_string(edc::to_dimacs(g->g), out); });
}

int edc_graph_from_dimacs(edc_ctx* ctx, const char* text, edc_graph** out) {
    if (need(ctx != nullptr, "ctx") || need(text != nullptr, "text") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        auto h = std::make_unique<edc_graph>();
        h->g = edc::from_dimacs(text);
        if (h->g.n > ctx->limits.graph_vertices)
            throw edc::TooLargeError(
                "parsed graph has " + std::to_string(h->g.n) +
                " vertices, over the graph_vertices limit " +
                std::to_string(ctx->limits.graph_vertices));
        *out = h.release();
        return EDC_OK;
    });
}

int edc_graph_to_edge_csv(const edc_graph* g, char** out) {
    if (need(g != nullptr, "g") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int { return out_string(edc::to_edge_csv(g->g), out); });
}

void edc_graph_free(edc_graph* g) { delete g; }

/* ---- colorings ---- */

int edc_color_blocks(edc_ctx* ctx, int q, int root_arity, int depth, int d,
                     int k, edc_coloring** out) {
    if (need(ctx != nullptr, "ctx") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        edc::Tree tree(q, root_arity, depth);
        const int kk = k <= 0 ? edc::choose_block_length(q, d) : k;
        auto h = std::make_unique<edc_coloring>();
        h->col = std::make_unique<edc::BlockColoring>(tree, d, kk,
                                                      ctx->limits);
        h->limits = ctx->limits;
        h->kind = 0;
        *out = h.release();
        return EDC_OK;
    });
}

int edc_choose_block_length(int q, int d, int* out) {
    if (need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        *out = edc::choose_block_length(q, d);
        return EDC_OK;
    });
}

int edc_color_interval(edc_ctx* ctx, int q, int root_arity, int depth, int d,
                       const char* c, edc_coloring** out) {
    if (need(ctx != nullptr, "ctx") || need(c != nullptr, "c") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        edc::Tree tree(q, root_arity, depth);
        const edc::Rational cr = edc::Rational::parse(c);
        auto h = std::make_unique<edc_coloring>();
        h->col = std::make_unique<edc::LiftedColoring>(tree, d, cr,
                                                       ctx->limits);
        h->limits = ctx->limits;
        h->kind = 1;
        *out = h.release();
        return EDC_OK;
    });
}

int edc_color_parity(edc_ctx* ctx, int q, int root_arity, int depth,
                     edc_coloring** out) {
    if (need(ctx != nullptr, "ctx") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        edc::Tree tree(q, root_arity, depth);
        auto h = std::make_unique<edc_coloring>();
        h->col = std::make_unique<edc::ParityColoring>(tree);
        h->limits = ctx->limits;
        h->kind = 2;
        *out = h.release();
        return EDC_OK;
    });
}

int edc_coloring_palette(const edc_coloring* col, uint32_t* out) {
    if (need(col != nullptr, "col") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    *out = col->col->palette_size();
    return EDC_OK;
}

int edc_coloring_color_of(const edc_coloring* col, const char* address,
                          uint32_t* out) {
    if (need(col != nullptr, "col") || need(address != nullptr, "address") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        const edc::Address a = edc::Address::parse(address);
        if (!col->col->tree().contains(a))
            return fail(EDC_EINVAL, "address outside the truncation: " +
                                        std::string(address));
        *out = col->col->color_of(a);
        return EDC_OK;
    });
}

int edc_coloring_csv(const edc_coloring* col, char** out) {
    if (need(col != nullptr, "col") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        const auto& tree = col->col->tree();
        if (tree.vertex_count() >
            static_cast<std::uint64_t>(col->limits.graph_vertices))
            throw edc::TooLargeError(
                "coloring CSV over " + std::to_string(tree.vertex_count()) +
                " vertices exceeds the graph_vertices limit " +
                std::to_string(col->limits.graph_vertices));
        std::ostringstream s;
        col->col->write_csv(s);
        return out_string(s.str(), out);
    });
}

int edc_coloring_edge_csv(const edc_coloring* col, char** out) {
    if (need(col != nullptr, "col") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    if (col->kind != 1)
        return fail(EDC_EINVAL,
                    "edge CSV is only available for interval colorings");
    return guarded([&]() -> int {
        const auto* lifted =
            static_cast<const edc::LiftedColoring*>(col->col.get());
        const auto& tree = lifted->tree();
        std::uint64_t edges = 0;
        for (int t = 1; t <= lifted->edge_levels(); ++t)
            edges += tree.level_size(t);
        if (edges > static_cast<std::uint64_t>(col->limits.graph_vertices))
            throw edc::TooLargeError(
                "edge CSV over " + std::to_string(edges) +
                " edges exceeds the graph_vertices limit " +
                std::to_string(col->limits.graph_vertices));
        std::ostringstream s;
        lifted->write_edge_csv(s);
        return out_string(s.str(), out);
    });
}

void edc_coloring_free(edc_coloring* col) { delete col; }

/* ---- verification ---- */

int edc_verify_tree(edc_ctx* ctx, const edc_coloring* col, int d, int cap,
                    int full, uint64_t samples, uint64_t seed,
                    edc_report** out) {
    if (need(ctx != nullptr, "ctx") || need(col != nullptr, "col") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        auto h = std::make_unique<edc_report>();
        if (full != 0) {
            h->rep = edc::verify_tree(*col->col, d, cap, ctx->limits);
        } else {
            if (samples == 0)
                return fail(EDC_EINVAL,
                            "sampled verification needs samples >= 1");
            h->rep = edc::verify_tree_sampled(*col->col, d, cap, samples,
                                              seed);
        }
        *out = h.release();
        return EDC_OK;
    });
}

int edc_verify_csv_on_graph(edc_ctx* ctx, const edc_graph* g,
                            const char* coloring_csv, edc_report** out) {
    if (need(ctx != nullptr, "ctx") || need(g != nullptr, "g") ||
        need(coloring_csv != nullptr, "coloring_csv") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        std::unordered_map<std::string, std::uint32_t> by_label;
        std::istringstream in{std::string(coloring_csv)};
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            if (line == "address,color" || line == "vertex,color")
                continue;
            const auto comma = line.rfind(',');
            if (comma == std::string::npos)
                return fail(EDC_EINVAL,
                            "malformed coloring row: " + line);
            const std::string label = line.substr(0, comma);
            const std::string value = line.substr(comma + 1);
            std::size_t used = 0;
            unsigned long cv = 0;
            try {
                cv = std::stoul(value, &used);
            } catch (const std::exception&) {
                return fail(EDC_EINVAL,
                            "malformed color value in row: " + line);
            }
            if (used != value.size() || cv > 0xffffffffUL)
                return fail(EDC_EINVAL,
                            "malformed color value in row: " + line);
            if (!by_label.emplace(label, static_cast<std::uint32_t>(cv))
                     .second)
                return fail(EDC_EINVAL,
                            "duplicate color row for vertex: " + label);
        }
        std::vector<std::uint32_t> colors;
        colors.reserve(static_cast<std::size_t>(g->g.n));
        for (const auto& label : g->g.labels) {
            const auto it = by_label.find(label);
            if (it == by_label.end())
                return fail(EDC_EINVAL, "no color for vertex: " + label);
            colors.push_back(it->second);
        }
        auto h = std::make_unique<edc_report>();
        h->rep = edc::verify_on_graph(colors, g->g);
        *out = h.release();
        return EDC_OK;
    });
}

int edc_report_counts(const edc_report* rep, uint64_t* pairs_checked,
                      uint64_t* violations) {
    if (need(rep != nullptr, "rep"))
        return EDC_EINVAL;
    if (pairs_checked != nullptr)
        *pairs_checked = rep->rep.pairs_checked;
    if (violations != nullptr)
        *violations = rep->rep.violations;
    return EDC_OK;
}

int edc_report_csv(const edc_report* rep, char** out) {
    if (need(rep != nullptr, "rep") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        std::ostringstream s;
        rep->rep.write_csv(s);
        return out_string(s.str(), out);
    });
}

void edc_report_free(edc_report* rep) { delete rep; }

/* ---- bounds and witnesses ---- */

int edc_bounds_exact_csv(edc_ctx* ctx, int q, int d, char** out) {
    if (need(ctx != nullptr, "ctx") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        const auto rows = edc::bounds_exact(q, d);
        std::ostringstream s;
        edc::write_bounds_csv(s, rows,
                              {{"bounds", "exact-distance"},
                               {"q", std::to_string(q)},
                               {"d", std::to_string(d)}});
        return out_string(s.str(), out);
    });
}

int edc_bounds_interval_csv(edc_ctx* ctx, int q, int d, const char* c,
                            char** out) {
    if (need(ctx != nullptr, "ctx") || need(c != nullptr, "c") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        const edc::Rational cr = edc::Rational::parse(c);
        const auto rows = edc::bounds_interval(q, d, cr);
        std::ostringstream s;
        edc::write_bounds_csv(s, rows,
                              {{"bounds", "distance-band"},
                               {"q", std::to_string(q)},
                               {"d", std::to_string(d)},
                               {"c", cr.str()}});
        return out_string(s.str(), out);
    });
}

int edc_witness_exact_csv(edc_ctx* ctx, int q, int d, char** out) {
    if (need(ctx != nullptr, "ctx") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        if (d < 2 || d % 2 != 0)
            return fail(EDC_EINVAL,
                        "exact witness requires an even distance d >= 2");
        edc::Tree tree(q, q, d / 2);
        const auto w = edc::exact_clique_witness(tree, d);
        std::ostringstream s;
        w.write_csv(s);
        return out_string(s.str(), out);
    });
}

int edc_witness_interval_csv(edc_ctx* ctx, int q, int d, const char* c,
                             char** out) {
    if (need(ctx != nullptr, "ctx") || need(c != nullptr, "c") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        if (d < 2 || d % 2 != 0)
            return fail(EDC_EINVAL,
                        "interval witness requires an even distance d >= 2");
        const edc::Rational cr = edc::Rational::parse(c);
        if (!(edc::Rational{1, 1} < cr))
            return fail(EDC_EINVAL, "interval witness requires c > 1");
        const long long half = (cr * edc::Rational{d, 2}).floor();
        if (half > 62)
            return fail(EDC_ETOOBIG, "floor(c*d/2) too deep: " +
                                         std::to_string(half));
        edc::Tree tree(q, q, static_cast<int>(half));
        const auto w = edc::interval_clique_witness(tree, d, cr);
        std::ostringstream s;
        w.write_csv(s);
        return out_string(s.str(), out);
    });
}

/* ---- energy ---- */

int edc_energy_csv(edc_ctx* ctx, const edc_coloring* col, int d,
                   int64_t color, uint64_t samples, uint64_t seed,
                   char** out) {
    if (need(ctx != nullptr, "ctx") || need(col != nullptr, "col") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        std::uint32_t cc;
        if (color < 0)
            cc = edc::most_frequent_color(*col->col, d);
        else
            cc = static_cast<std::uint32_t>(color);
        const auto prof = edc::energy_profile(*col->col, d, cc, samples,
                                              seed, ctx->limits);
        std::ostringstream s;
        prof.write_csv(s);
        return out_string(s.str(), out);
    });
}

/* ---- chi ---- */

int edc_chi_solve(edc_ctx* ctx, const edc_graph* g, uint64_t max_nodes,
                  double max_seconds, edc_chi_result** out) {
    if (need(ctx != nullptr, "ctx") || need(g != nullptr, "g") ||
        need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        edc::ChiBudget budget;
        if (max_nodes > 0)
            budget.max_nodes = max_nodes;
        if (max_seconds > 0)
            budget.max_seconds = max_seconds;
        auto h = std::make_unique<edc_chi_result>();
        h->res = edc::chi_exact(g->g, budget);
        h->labels = g->g.labels;
        *out = h.release();
        return EDC_OK;
    });
}

int edc_chi_values(const edc_chi_result* r, int* chi, int* clique_lb,
                   int* dsatur_ub, uint64_t* nodes, int* timed_out) {
    if (need(r != nullptr, "r"))
        return EDC_EINVAL;
    if (chi != nullptr)
        *chi = r->res.chi;
    if (clique_lb != nullptr)
        *clique_lb = r->res.clique_lb;
    if (dsatur_ub != nullptr)
        *dsatur_ub = r->res.dsatur_ub;
    if (nodes != nullptr)
        *nodes = r->res.nodes;
    if (timed_out != nullptr)
        *timed_out = r->res.timed_out ? 1 : 0;
    return EDC_OK;
}

int edc_chi_coloring_csv(const edc_chi_result* r, char** out) {
    if (need(r != nullptr, "r") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        std::ostringstream s;
        s << "# coloring: chi-solver\n";
        s << "# chi: " << r->res.chi << "\n";
        s << "# timed_out: " << (r->res.timed_out ? 1 : 0) << "\n";
        s << "vertex,color\n";
        for (std::size_t i = 0; i < r->res.coloring.size(); ++i)
            s << r->labels[i] << ',' << r->res.coloring[i] << '\n';
        return out_string(s.str(), out);
    });
}

int edc_chi_clique_csv(const edc_chi_result* r, char** out) {
    if (need(r != nullptr, "r") || need(out != nullptr, "out"))
        return EDC_EINVAL;
    return guarded([&]() -> int {
        std::ostringstream s;
        s << "# clique: greedy\n";
        s << "# size: " << r->res.clique.size() << "\n";
        s << "vertex\n";
        for (const auto v : r->res.clique)
            s << r->labels[static_cast<std::size_t>(v)] << '\n';
        return out_string(s.str(), out);
    });
}

void edc_chi_result_free(edc_chi_result* r) { delete r; }

} // extern "C"
