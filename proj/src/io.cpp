#include "meso/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace meso {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // normalize negative zero for stable artifacts
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

namespace {

struct NamedForm {
    const char* name;
    Form form;
};

std::vector<NamedForm> state_fields(const CosseratState& s, const MaterialParameters& p) {
    auto [H, O] = excitations(s, p);
    std::vector<NamedForm> out;
    out.push_back({"e", s.coframe()});
    out.push_back({"omega", s.connection()});
    out.push_back({"J", s.rate_coframe()});
    out.push_back({"K", s.rate_connection()});
    out.push_back({"T", s.torsion()});
    out.push_back({"Omega", s.curvature()});
    out.push_back({"H", H});
    out.push_back({"O", O});
    return out;
}

std::string component_name(const Form& f, int b, int v) {
    std::string label = basis_label(f.grid().dim, f.degree(), b);
    if (f.kind() == ValueKind::Scalar) return label;
    return std::string(label) + ":" + std::to_string(v + 1);
}

} // namespace

std::string trajectory_csv(const Trajectory& traj, const MaterialParameters& p) {
    std::string out;
    const Grid& g = traj.states.empty() ? Grid{} : traj.states.front().grid();
    out += g.dim == 3 ? "t,x,y,z,field,component,value\n" : "t,x,y,field,component,value\n";
    for (std::size_t si = 0; si < traj.states.size(); ++si) {
        const CosseratState& s = traj.states[si];
        auto fields = state_fields(s, p);
        std::string tstr = format_double(traj.times[si]);
        for (const auto& nf : fields) {
            Form f = sample(nf.form, s.time(), 0);
            for (int b = 0; b < f.nb(); ++b)
                for (int v = 0; v < f.nv(); ++v) {
                    std::string comp = component_name(f, b, v);
                    for (int ix = 0; ix < g.n[0]; ++ix)
                        for (int iy = 0; iy < g.n[1]; ++iy)
                            for (int iz = 0; iz < g.n[2]; ++iz) {
                                out += tstr;
                                out += ',';
                                out += format_double(g.coord(0, ix));
                                out += ',';
                                out += format_double(g.coord(1, iy));
                                if (g.dim == 3) {
                                    out += ',';
                                    out += format_double(g.coord(2, iz));
                                }
                                out += ',';
                                out += nf.name;
                                out += ',';
                                out += comp;
                                out += ',';
                                out += format_double(f.node(b, v, g.index(ix, iy, iz)));
                                out += '\n';
                            }
                }
        }
    }
    return out;
}

std::string appendix_table_csv(const std::vector<AppendixRow>& rows) {
    std::string out =
        "y,a,omega,F_closed_form,F_oracle,paper_a,paper_omega,paper_F,F_discrepancy,flagged\n";
    for (const auto& r : rows) {
        out += format_double(r.y) + ',' + format_double(r.a) + ',' + format_double(r.omega) +
               ',' + format_double(r.F_closed) + ',' + format_double(r.F_oracle) + ',';
        if (r.has_paper) {
            out += format_double(r.paper_a) + ',' + format_double(r.paper_omega) + ',' +
                   format_double(r.paper_F) + ',' + format_double(r.F_discrepancy) + ',' +
                   (r.discrepancy ? "1" : "0");
        } else {
            out += ",,,,";
        }
        out += '\n';
    }
    return out;
}

std::string report_json(const ResidualReport& rep, const std::string& title) {
    nlohmann::ordered_json j;
    j["title"] = title;
    j["pass"] = rep.all_pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& [name, c] : rep.checks) {
        nlohmann::ordered_json e;
        e["name"] = name;
        e["norm_inf"] = c.norm_inf;
        e["norm_l2"] = c.norm_l2;
        e["tol"] = c.tol;
        e["pass"] = c.pass;
        if (c.order) e["order"] = *c.order;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "check,resolution,norm,order\n";
    for (const auto& r : rows)
        out += r.check + ',' + std::to_string(r.resolution) + ',' + format_double(r.norm) + ',' +
               r.order + '\n';
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out << content;
}

} // namespace meso
