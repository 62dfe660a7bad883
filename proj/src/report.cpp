#include "qnet/report.hpp"

#include <sstream>

#include "qnet/lin.hpp"
#include "qnet/matching.hpp"

namespace qnet {

namespace {

std::vector<std::string> labels(const QDigraph& g, const std::vector<VertexId>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (VertexId v : vs) out.push_back(g.label(v));
    return out;
}

void line(std::ostream& out, const char* key, const std::vector<std::string>& values) {
    out << key << ':';
    for (const auto& v : values) out << ' ' << v;
    out << '\n';
}

}  // namespace

AnalysisReport analyze(const QDigraph& g) {
    if (g.state_count() == 0) throw NetworkError("empty network");
    const auto m = maximum_matching(g);
    const auto d = minimum_drivers(g, m);
    const auto lin = lin_check(g);

    AnalysisReport r;
    r.n = g.state_count();
    r.n_u = g.driver_count();
    r.m = m.size();
    r.n_d = d.n_d;
    r.unmatched = labels(g, d.unmatched);
    r.inaccessible = labels(g, lin.inaccessible);
    if (lin.dilation) {
        r.dilation_s = labels(g, lin.dilation->s_set);
        r.dilation_t = labels(g, lin.dilation->t_set);
    }
    r.controllable = lin.controllable;

    const auto cover = build_cactus_cover(g, m, d).cover;
    r.cacti = cover.cacti.size();
    for (const auto& c : cover.cacti) {
        r.stems += c.stem.empty() ? 0 : 1;
        r.buds += c.buds.size();
    }
    return r;
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "n: " << r.n << '\n';
    out << "n_u: " << r.n_u << '\n';
    out << "m: " << r.m << '\n';
    out << "n_d: " << r.n_d << '\n';
    line(out, "unmatched", r.unmatched);
    line(out, "inaccessible", r.inaccessible);
    line(out, "dilation_s", r.dilation_s);
    line(out, "dilation_t", r.dilation_t);
    out << "controllable: " << (r.controllable ? "true" : "false") << '\n';
    out << "cacti: " << r.cacti << '\n';
    out << "stems: " << r.stems << '\n';
    out << "buds: " << r.buds << '\n';
    return out.str();
}

}  // namespace qnet
