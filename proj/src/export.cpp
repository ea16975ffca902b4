#include "gic/export.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

#include "gic/errors.hpp"

namespace gic {

namespace {

using ojson = nlohmann::ordered_json;

ojson channel_json(const NormalizedChannel& ch) {
    ojson j;
    j["n"] = ch.n();
    ojson a = ojson::array();
    for (int i = 0; i < ch.n(); ++i) {
        ojson row = ojson::array();
        for (int k = 0; k < ch.n(); ++k) row.push_back(round_sig12(ch.a(i, k)));
        a.push_back(std::move(row));
    }
    j["a"] = std::move(a);
    ojson pbar = ojson::array();
    for (int i = 0; i < ch.n(); ++i) pbar.push_back(round_sig12(ch.pbar(i)));
    j["pbar"] = std::move(pbar);
    return j;
}

void csv_channel_lines(std::ostream& os, const NormalizedChannel& ch) {
    os << "# n=" << ch.n() << "\n";
    for (int i = 0; i < ch.n(); ++i) {
        os << "#";
        for (int k = 0; k < ch.n(); ++k) {
            if (i == k) continue;
            os << " a" << (i + 1) << (k + 1) << "=" << format_sig12(ch.a(i, k));
        }
        os << "\n";
    }
    os << "#";
    for (int i = 0; i < ch.n(); ++i)
        os << " pbar" << (i + 1) << "=" << format_sig12(ch.pbar(i));
    os << "\n";
}

} // namespace

std::string format_sig12(double x) {
    if (x == 0.0) x = 0.0; // canonicalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round_sig12(double x) { return std::strtod(format_sig12(x).c_str(), nullptr); }

std::string to_string(ActiveConstraint c) {
    return c == ActiveConstraint::UserOneCap ? "user1_cap" : "user2_cap";
}

std::string to_string(SpacingMode m) {
    return m == SpacingMode::UniformT ? "uniform-t" : "uniform-rate";
}

std::string to_string(RegionLabel l) {
    switch (l) {
        case RegionLabel::A: return "A";
        case RegionLabel::B: return "B";
        default: return "on_separator";
    }
}

void write_curve(std::ostream& os, const std::vector<BoundaryPoint2>& curve,
                 const NormalizedChannel& ch, SpacingMode spacing, TableFormat fmt) {
    if (curve.empty()) throw DomainError("cannot serialize an empty curve");
    if (fmt == TableFormat::Csv) {
        os << "# boundary2\n";
        csv_channel_lines(os, ch);
        os << "# samples=" << curve.size() << " spacing=" << to_string(spacing) << "\n";
        os << "t,s1,s2,c1_bits,c2_bits,active_constraint\n";
        for (const auto& p : curve) {
            os << format_sig12(p.t) << ',' << format_sig12(p.sinr.s1) << ','
               << format_sig12(p.sinr.s2) << ',' << format_sig12(p.c1_bits) << ','
               << format_sig12(p.c2_bits) << ',' << to_string(p.active) << "\n";
        }
        return;
    }
    ojson j;
    j["kind"] = "boundary2";
    j["channel"] = channel_json(ch);
    j["samples"] = curve.size();
    j["spacing"] = to_string(spacing);
    ojson rows = ojson::array();
    for (const auto& p : curve) {
        ojson r;
        r["t"] = round_sig12(p.t);
        r["s1"] = round_sig12(p.sinr.s1);
        r["s2"] = round_sig12(p.sinr.s2);
        r["c1_bits"] = round_sig12(p.c1_bits);
        r["c2_bits"] = round_sig12(p.c2_bits);
        r["active_constraint"] = to_string(p.active);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
}

void write_surface(std::ostream& os, const SurfaceSample3& surface,
                   const NormalizedChannel& ch, TableFormat fmt) {
    if (fmt == TableFormat::Csv) {
        os << "# surface3\n";
        csv_channel_lines(os, ch);
        os << "# resolution=" << surface.resolution << "\n";
        for (const auto& face : surface.faces)
            os << "# face " << face.face << " rows=" << face.points.size() << "\n";
        os << "face,s_a,s_b,s_bound\n";
        for (const auto& face : surface.faces)
            for (const auto& p : face.points)
                os << face.face << ',' << format_sig12(p.s_a) << ',' << format_sig12(p.s_b)
                   << ',' << format_sig12(p.s_bound) << "\n";
        return;
    }
    ojson j;
    j["kind"] = "surface3";
    j["channel"] = channel_json(ch);
    j["resolution"] = surface.resolution;
    ojson faces = ojson::array();
    for (const auto& face : surface.faces) {
        ojson f;
        f["face"] = face.face;
        f["row_count"] = face.points.size();
        ojson rows = ojson::array();
        for (const auto& p : face.points) {
            ojson r;
            r["s_a"] = round_sig12(p.s_a);
            r["s_b"] = round_sig12(p.s_b);
            r["s_bound"] = round_sig12(p.s_bound);
            rows.push_back(std::move(r));
        }
        f["rows"] = std::move(rows);
        faces.push_back(std::move(f));
    }
    j["faces"] = std::move(faces);
    os << j.dump(2) << "\n";
}

void write_sumrate(std::ostream& os, const SumRateSolution& sol,
                   const NormalizedChannel& ch, TableFormat fmt) {
    static const char* corner_names[3] = {"user2_only", "user1_only", "full_power"};
    const auto is_best = [&](const CornerCandidate& c) {
        return c.u.u1 == sol.best_u.u1 && c.u.u2 == sol.best_u.u2;
    };
    if (fmt == TableFormat::Csv) {
        os << "# sumrate\n";
        csv_channel_lines(os, ch);
        os << "# r_star_bits=" << format_sig12(sol.r_star_bits) << "\n";
        os << "# m_r1_bits=" << format_sig12(sol.m_point.r1_bits)
           << " m_r2_bits=" << format_sig12(sol.m_point.r2_bits) << "\n";
        os << "# region_label=" << to_string(sol.region_label) << "\n";
        os << "# best_u1=" << format_sig12(sol.best_u.u1)
           << " best_u2=" << format_sig12(sol.best_u.u2)
           << " best_value_bits=" << format_sig12(sol.best_value_bits) << "\n";
        os << "corner,u1,u2,sum_rate_bits,is_best\n";
        for (int i = 0; i < 3; ++i) {
            const auto& c = sol.corner_table[static_cast<std::size_t>(i)];
            os << corner_names[i] << ',' << format_sig12(c.u.u1) << ','
               << format_sig12(c.u.u2) << ',' << format_sig12(c.sum_rate_bits) << ','
               << (is_best(c) ? 1 : 0) << "\n";
        }
        return;
    }
    ojson j;
    j["kind"] = "sumrate";
    j["channel"] = channel_json(ch);
    j["r_star_bits"] = round_sig12(sol.r_star_bits);
    j["m_point"] = {{"r1_bits", round_sig12(sol.m_point.r1_bits)},
                    {"r2_bits", round_sig12(sol.m_point.r2_bits)}};
    j["region_label"] = to_string(sol.region_label);
    j["best"] = {{"u1", round_sig12(sol.best_u.u1)},
                 {"u2", round_sig12(sol.best_u.u2)},
                 {"value_bits", round_sig12(sol.best_value_bits)}};
    ojson corners = ojson::array();
    for (int i = 0; i < 3; ++i) {
        const auto& c = sol.corner_table[static_cast<std::size_t>(i)];
        ojson r;
        r["name"] = corner_names[i];
        r["u1"] = round_sig12(c.u.u1);
        r["u2"] = round_sig12(c.u.u2);
        r["sum_rate_bits"] = round_sig12(c.sum_rate_bits);
        r["is_best"] = is_best(c);
        corners.push_back(std::move(r));
    }
    j["corners"] = std::move(corners);
    os << j.dump(2) << "\n";
}

} // namespace gic
