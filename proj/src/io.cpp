#include "zetalab/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "zetalab/meanvalue.hpp"
#include "zetalab/version.hpp"

namespace zetalab {

namespace fs = std::filesystem;

// ---------------------------------------------------------------- formatting

namespace {

std::string fmt17(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void dump17_rec(const ojson& j, std::string& out, int indent, int depth) {
    std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case ojson::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in + ojson(it.key()).dump() + ": ";
                dump17_rec(it.value(), out, indent, depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            return;
        }
        case ojson::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            bool scalars = std::all_of(j.begin(), j.end(), [](const ojson& v) {
                return !v.is_structured();
            });
            if (scalars) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    dump17_rec(j[i], out, indent, depth + 1);
                    if (i + 1 < j.size()) out += ", ";
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump17_rec(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            return;
        }
        case ojson::value_t::number_float: {
            double x = j.get<double>();
            if (!std::isfinite(x)) throw io_error("dump_json17: non-finite float in document");
            out += fmt17(x);
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

} // namespace

std::string dump_json17(const ojson& j, int indent) {
    std::string out;
    dump17_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ------------------------------------------------------------------- parsing

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
    throw config_error("config: " + path + ": " + why);
}

const ojson& req(const ojson& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) bad(path, "missing field '" + key + "'");
    return *it;
}

double num(const ojson& j, const std::string& path) {
    if (!j.is_number()) bad(path, "expected a number");
    return j.get<double>();
}

// accepts a number or the string "inf"
double num_or_inf(const ojson& j, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
        bad(path, "expected a number or \"inf\"");
    }
    return num(j, path);
}

std::uint64_t uint(const ojson& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) bad(path, "expected an integer");
    if (j.is_number_integer() && j.get<std::int64_t>() < 0) bad(path, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

cplx parse_cplx(const ojson& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) bad(path, "expected [re, im]");
    return {num(j[0], path + "[0]"), num(j[1], path + "[1]")};
}

ojson emit_cplx(cplx z) { return ojson::array({z.real(), z.imag()}); }

std::vector<cplx> parse_cplx_list(const ojson& j, const std::string& path) {
    if (!j.is_array() || j.empty()) bad(path, "expected a nonempty array of [re, im]");
    std::vector<cplx> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_cplx(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

ojson emit_cplx_list(const std::vector<cplx>& v) {
    ojson arr = ojson::array();
    for (cplx z : v) arr.push_back(emit_cplx(z));
    return arr;
}

AmbientStrip parse_ambient(const ojson& j, const std::string& path) {
    AmbientStrip a;
    const ojson& sig = req(j, "sigma", path);
    if (!sig.is_array() || sig.size() != 2) bad(path + ".sigma", "expected [lo, hi]");
    a.sigma_lo = num(sig[0], path + ".sigma[0]");
    a.sigma_hi = num(sig[1], path + ".sigma[1]");
    a.t_bound = num(req(j, "t_bound", path), path + ".t_bound");
    return a;
}

ojson emit_ambient(const AmbientStrip& a) {
    ojson j;
    j["sigma"] = ojson::array({a.sigma_lo, a.sigma_hi});
    j["t_bound"] = a.t_bound;
    return j;
}

CompactRegion parse_region(const ojson& j, const std::string& path) {
    std::string shape = req(j, "shape", path).get<std::string>();
    AmbientStrip amb = parse_ambient(req(j, "ambient", path), path + ".ambient");
    if (shape == "rectangle") {
        const ojson& sig = req(j, "sigma", path);
        const ojson& t = req(j, "t", path);
        if (!sig.is_array() || sig.size() != 2) bad(path + ".sigma", "expected [lo, hi]");
        if (!t.is_array() || t.size() != 2) bad(path + ".t", "expected [lo, hi]");
        return CompactRegion::rectangle(num(sig[0], path), num(sig[1], path), num(t[0], path),
                                        num(t[1], path), amb);
    }
    if (shape == "disk")
        return CompactRegion::disk(parse_cplx(req(j, "center", path), path + ".center"),
                                   num(req(j, "radius", path), path + ".radius"), amb);
    bad(path + ".shape", "expected 'rectangle' or 'disk'");
}

ojson emit_region(const CompactRegion& r) {
    ojson j;
    if (r.shape == CompactRegion::Shape::rectangle) {
        j["shape"] = "rectangle";
        j["sigma"] = ojson::array({r.sigma_min, r.sigma_max});
        j["t"] = ojson::array({r.t_min, r.t_max});
    } else {
        j["shape"] = "disk";
        j["center"] = emit_cplx(r.center);
        j["radius"] = r.radius;
    }
    j["ambient"] = emit_ambient(r.ambient);
    return j;
}

TargetFunction parse_target(const ojson& j, const std::string& path) {
    TargetFunction f;
    std::string kind = req(j, "kind", path).get<std::string>();
    if (kind == "constant") {
        f.kind = TargetFunction::Kind::constant;
        f.coeffs = {parse_cplx(req(j, "value", path), path + ".value")};
    } else if (kind == "polynomial" || kind == "exp_polynomial") {
        f.kind = kind == "polynomial" ? TargetFunction::Kind::polynomial
                                      : TargetFunction::Kind::exp_polynomial;
        f.coeffs = parse_cplx_list(req(j, "coeffs", path), path + ".coeffs");
    } else if (kind == "sampled") {
        f.kind = TargetFunction::Kind::sampled;
        f.grid_points = parse_cplx_list(req(j, "points", path), path + ".points");
        f.values = parse_cplx_list(req(j, "values", path), path + ".values");
        if (f.grid_points.size() != f.values.size())
            bad(path, "sampled target: points/values lengths differ");
    } else if (kind == "self") {
        f.kind = TargetFunction::Kind::self_shift;
    } else {
        bad(path + ".kind", "unknown target kind '" + kind + "'");
    }
    return f;
}

ojson emit_target(const TargetFunction& f) {
    ojson j;
    switch (f.kind) {
        case TargetFunction::Kind::constant:
            j["kind"] = "constant";
            j["value"] = emit_cplx(f.coeffs[0]);
            break;
        case TargetFunction::Kind::polynomial:
            j["kind"] = "polynomial";
            j["coeffs"] = emit_cplx_list(f.coeffs);
            break;
        case TargetFunction::Kind::exp_polynomial:
            j["kind"] = "exp_polynomial";
            j["coeffs"] = emit_cplx_list(f.coeffs);
            break;
        case TargetFunction::Kind::sampled:
            j["kind"] = "sampled";
            j["points"] = emit_cplx_list(f.grid_points);
            j["values"] = emit_cplx_list(f.values);
            break;
        case TargetFunction::Kind::self_shift:
            j["kind"] = "self";
            break;
    }
    return j;
}

PeriodicSequence parse_sequence(const ojson& j, const std::string& path) {
    try {
        return PeriodicSequence(parse_cplx_list(j, path));
    } catch (const domain_error& e) {
        bad(path, e.what());
    }
}

std::vector<LocalFactor> parse_factors(const ojson& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of factors");
    std::vector<LocalFactor> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const ojson& fj = j[i];
        std::string p = path + "[" + std::to_string(i) + "]";
        LocalFactor f;
        f.root = parse_cplx(req(fj, "root", p), p + ".root");
        f.exponent = static_cast<int>(uint(req(fj, "exponent", p), p + ".exponent"));
        out.push_back(f);
    }
    return out;
}

ojson emit_factors(const std::vector<LocalFactor>& fs) {
    ojson arr = ojson::array();
    for (const auto& f : fs) {
        ojson j;
        j["root"] = emit_cplx(f.root);
        j["exponent"] = f.exponent;
        arr.push_back(j);
    }
    return arr;
}

EulerProductSpec parse_euler_spec(const ojson& j, const std::string& path) {
    std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "custom";
    if (kind == "riemann") return EulerProductSpec::riemann();
    if (kind == "divisor")
        return EulerProductSpec::divisor(static_cast<int>(uint(req(j, "degree", path), path + ".degree")));
    if (kind != "custom") bad(path + ".kind", "expected 'riemann', 'divisor' or 'custom'");

    EulerProductSpec spec;
    spec.default_factors = parse_factors(req(j, "default_factors", path), path + ".default_factors");
    if (j.contains("overrides")) {
        for (auto it = j["overrides"].begin(); it != j["overrides"].end(); ++it) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(it.key());
            } catch (...) {
                bad(path + ".overrides", "key '" + it.key() + "' is not an integer");
            }
            spec.overrides[p] = parse_factors(it.value(), path + ".overrides." + it.key());
        }
    }
    if (j.contains("growth_alpha")) spec.growth_alpha = num(j["growth_alpha"], path + ".growth_alpha");
    if (j.contains("growth_beta")) spec.growth_beta = num(j["growth_beta"], path + ".growth_beta");
    if (j.contains("c1")) spec.c1 = num(j["c1"], path + ".c1");
    if (j.contains("sigma_star")) spec.sigma_star = num(j["sigma_star"], path + ".sigma_star");
    try {
        spec.validate();
    } catch (const domain_error& e) {
        bad(path, e.what());
    }
    return spec;
}

ojson emit_euler_spec(const EulerProductSpec& spec) {
    ojson j;
    j["kind"] = "custom";
    j["default_factors"] = emit_factors(spec.default_factors);
    ojson ov = ojson::object();
    for (const auto& [p, fs] : spec.overrides) ov[std::to_string(p)] = emit_factors(fs);
    j["overrides"] = ov;
    j["growth_alpha"] = spec.growth_alpha;
    j["growth_beta"] = spec.growth_beta;
    j["c1"] = spec.c1;
    if (spec.sigma_star) j["sigma_star"] = *spec.sigma_star;
    return j;
}

IndexVector parse_index(const ojson& j, const std::string& path) {
    IndexVector idx;
    if (j.contains("primes")) {
        for (auto it = j["primes"].begin(); it != j["primes"].end(); ++it) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(it.key());
            } catch (...) {
                bad(path + ".primes", "key '" + it.key() + "' is not an integer");
            }
            if (!it.value().is_number_integer() && !it.value().is_number_unsigned())
                bad(path + ".primes." + it.key(), "expected an integer exponent");
            idx.prime_indices[p] = it.value().get<std::int64_t>();
        }
    }
    if (j.contains("integer_slots")) {
        for (const auto& slot : j["integer_slots"]) {
            std::map<std::uint64_t, std::int64_t> m;
            for (auto it = slot.begin(); it != slot.end(); ++it) {
                std::uint64_t k = 0;
                try {
                    k = std::stoull(it.key());
                } catch (...) {
                    bad(path + ".integer_slots", "key '" + it.key() + "' is not an integer");
                }
                m[k] = it.value().get<std::int64_t>();
            }
            idx.integer_indices.push_back(std::move(m));
        }
    }
    return idx;
}

ojson emit_index(const IndexVector& idx) {
    ojson j;
    ojson primes = ojson::object();
    for (const auto& [p, k] : idx.prime_indices) primes[std::to_string(p)] = k;
    j["primes"] = primes;
    ojson slots = ojson::array();
    for (const auto& slot : idx.integer_indices) {
        ojson sj = ojson::object();
        for (const auto& [m, l] : slot) sj[std::to_string(m)] = l;
        slots.push_back(sj);
    }
    j["integer_slots"] = slots;
    return j;
}

} // namespace

Config parse_config(const ojson& doc) {
    if (!doc.is_object()) throw config_error("config: top level must be a JSON object");
    Config cfg;

    if (doc.contains("seed")) cfg.seed = uint(doc["seed"], "seed");
    if (doc.contains("threads")) {
        std::uint64_t t = uint(doc["threads"], "threads");
        if (t > 4096) bad("threads", "implausible thread count");
        cfg.threads = static_cast<int>(t);
    }
    if (doc.contains("l_set_constant")) {
        cfg.l_set_constant = doc["l_set_constant"].get<std::string>();
        if (cfg.l_set_constant != "2pi_over_h" && cfg.l_set_constant != "pi_over_h")
            bad("l_set_constant", "expected '2pi_over_h' or 'pi_over_h'");
    }

    if (doc.contains("partition")) {
        const ojson& pj = doc["partition"];
        std::uint64_t a = uint(req(pj, "a", "partition"), "partition.a");
        std::uint64_t b = uint(req(pj, "b", "partition"), "partition.b");
        try {
            cfg.partition = prime_partition(a, b);
        } catch (const domain_error& e) {
            bad("partition", e.what());
        }
    }

    if (doc.contains("instance")) {
        const ojson& ij = doc["instance"];
        std::string kind = req(ij, "kind", "instance").get<std::string>();
        bool use_part = ij.contains("use_partition") ? ij["use_partition"].get<bool>()
                                                     : cfg.partition.has_value();
        if (use_part && !cfg.partition) bad("instance.use_partition", "no partition configured");
        std::optional<PrimePartition> part = use_part ? cfg.partition : std::nullopt;
        if (kind == "riemann") {
            cfg.instance = ZetaInstance::riemann(part);
        } else if (kind == "periodic_dirichlet") {
            cfg.instance = ZetaInstance::periodic_dirichlet(
                parse_sequence(req(ij, "coeffs", "instance"), "instance.coeffs"), part);
        } else {
            bad("instance.kind", "expected 'riemann' or 'periodic_dirichlet'");
        }
    }

    if (doc.contains("euler_spec")) cfg.euler_spec = parse_euler_spec(doc["euler_spec"], "euler_spec");

    if (doc.contains("eval")) {
        Config::EvalSection ev;
        ev.s = parse_cplx(req(doc["eval"], "s", "eval"), "eval.s");
        if (doc["eval"].contains("tol")) ev.tol = num(doc["eval"]["tol"], "eval.tol");
        cfg.eval = ev;
    }

    if (doc.contains("scan")) {
        const ojson& sj = doc["scan"];
        if (!cfg.instance) bad("scan", "scan requires an instance");
        if (!cfg.partition) bad("scan", "scan requires a partition (h is derived from a/b)");
        ScanConfig sc{.instance = *cfg.instance};
        sc.h = cfg.partition->h;
        sc.epsilon = num_or_inf(req(sj, "epsilon", "scan"), "scan.epsilon");
        if (!(sc.epsilon > 0.0)) bad("scan.epsilon", "must be positive");
        if (sj.contains("N")) sc.N = uint(sj["N"], "scan.N");
        if (sj.contains("grid_delta")) sc.grid_delta = num(sj["grid_delta"], "scan.grid_delta");
        if (!(sc.grid_delta > 0.0)) bad("scan.grid_delta", "must be positive");
        sc.threads = cfg.threads;

        if (sj.contains("mode")) {
            const ojson& mj = sj["mode"];
            std::string type = req(mj, "type", "scan.mode").get<std::string>();
            if (type == "continuous") {
                sc.mode.continuous = true;
                sc.mode.T = num(req(mj, "T", "scan.mode"), "scan.mode.T");
                sc.mode.tau_step = num(req(mj, "tau_step", "scan.mode"), "scan.mode.tau_step");
            } else if (type != "discrete") {
                bad("scan.mode.type", "expected 'discrete' or 'continuous'");
            }
        }

        const ojson& pj = req(sj, "phi_slot", "scan");
        sc.phi.region = parse_region(req(pj, "region", "scan.phi_slot"), "scan.phi_slot.region");
        sc.phi.target = parse_target(req(pj, "target", "scan.phi_slot"), "scan.phi_slot.target");
        if (pj.contains("nonvanish_margin"))
            sc.phi.nonvanish_margin = num(pj["nonvanish_margin"], "scan.phi_slot.nonvanish_margin");
        if (pj.contains("epsilon"))
            sc.phi.epsilon = num_or_inf(pj["epsilon"], "scan.phi_slot.epsilon");

        const ojson& hj = req(sj, "hurwitz_slots", "scan");
        if (!hj.is_array() || hj.empty()) bad("scan.hurwitz_slots", "expected a nonempty array");
        for (std::size_t i = 0; i < hj.size(); ++i) {
            std::string path = "scan.hurwitz_slots[" + std::to_string(i) + "]";
            const ojson& slot = hj[i];
            HurwitzSlot hs{num(req(slot, "alpha", path), path + ".alpha"),
                           parse_sequence(req(slot, "coeffs", path), path + ".coeffs"),
                           parse_region(req(slot, "region", path), path + ".region"),
                           parse_target(req(slot, "target", path), path + ".target"),
                           std::nullopt,
                           slot.contains("alpha_note") ? slot["alpha_note"].get<std::string>() : ""};
            if (slot.contains("epsilon"))
                hs.epsilon = num_or_inf(slot["epsilon"], path + ".epsilon");
            sc.slots.push_back(std::move(hs));
        }

        // cross-field checks the scan itself would only hit at run time
        if (sc.phi.target.kind != TargetFunction::Kind::self_shift) {
            try {
                certify_nonvanishing(sc.phi.target, sample_compact(sc.phi.region, sc.grid_delta),
                                     sc.phi.nonvanish_margin);
            } catch (const target_error& e) {
                bad("scan.phi_slot.target", e.what());
            }
        }
        cfg.scan = std::move(sc);
    }

    if (doc.contains("weyl")) {
        const ojson& wj = doc["weyl"];
        Config::WeylSection w;
        w.index = parse_index(req(wj, "index", "weyl"), "weyl.index");
        if (wj.contains("alphas"))
            for (std::size_t i = 0; i < wj["alphas"].size(); ++i)
                w.alphas.push_back(num(wj["alphas"][i], "weyl.alphas"));
        if (w.index.integer_indices.size() > w.alphas.size())
            bad("weyl", "more integer slots than alphas");
        const ojson& nl = req(wj, "N_list", "weyl");
        if (!nl.is_array() || nl.empty()) bad("weyl.N_list", "expected a nonempty array");
        for (std::size_t i = 0; i < nl.size(); ++i) w.n_list.push_back(uint(nl[i], "weyl.N_list"));
        if (wj.contains("use_partition")) w.use_partition = wj["use_partition"].get<bool>();
        if (!cfg.partition) bad("weyl", "weyl requires a partition (h is derived from a/b)");
        cfg.weyl = std::move(w);
    }

    if (doc.contains("dist")) {
        const ojson& dj = doc["dist"];
        if (!cfg.instance) bad("dist", "dist requires an instance");
        if (!cfg.partition) bad("dist", "dist requires a partition (h is derived from a/b)");
        Config::DistSection d;
        d.s0 = parse_cplx(req(dj, "s0", "dist"), "dist.s0");
        if (dj.contains("orbit_N")) d.orbit_count = uint(dj["orbit_N"], "dist.orbit_N");
        if (dj.contains("haar_count")) d.haar_count = uint(dj["haar_count"], "dist.haar_count");
        if (dj.contains("trunc_n")) d.trunc_n = uint(dj["trunc_n"], "dist.trunc_n");
        if (dj.contains("sigma1")) d.sigma1 = num(dj["sigma1"], "dist.sigma1");
        if (!(d.sigma1 > 0.5)) bad("dist.sigma1", "must exceed 1/2");
        if (dj.contains("max_points")) d.max_points = uint(dj["max_points"], "dist.max_points");
        cfg.dist = d;
    }

    if (doc.contains("meanvalue")) {
        const ojson& mj = doc["meanvalue"];
        if (!cfg.instance) bad("meanvalue", "meanvalue requires an instance");
        Config::MeanValueSection m;
        m.sigma0 = num(req(mj, "sigma0", "meanvalue"), "meanvalue.sigma0");
        const ojson& span = req(mj, "span", "meanvalue");
        std::string type = req(span, "type", "meanvalue.span").get<std::string>();
        if (type == "discrete") {
            m.continuous = false;
            m.n = uint(req(span, "N", "meanvalue.span"), "meanvalue.span.N");
            if (!cfg.partition) bad("meanvalue", "discrete span requires a partition for h");
        } else if (type == "continuous") {
            m.continuous = true;
            m.T = num(req(span, "T", "meanvalue.span"), "meanvalue.span.T");
            m.step = num(req(span, "step", "meanvalue.span"), "meanvalue.span.step");
        } else {
            bad("meanvalue.span.type", "expected 'discrete' or 'continuous'");
        }
        cfg.meanvalue = m;
    }

    if (doc.contains("kappa")) {
        if (!cfg.euler_spec) bad("kappa", "kappa requires an euler_spec");
        Config::KappaSection k;
        k.x = uint(req(doc["kappa"], "x", "kappa"), "kappa.x");
        cfg.kappa = k;
    }

    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    ojson doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw config_error("config: JSON parse failure in " + path + ": " + e.what());
    }
    return parse_config(doc);
}

ojson emit_config(const Config& cfg) {
    ojson doc;
    doc["seed"] = cfg.seed;
    doc["threads"] = cfg.threads;
    doc["l_set_constant"] = cfg.l_set_constant;

    if (cfg.partition) {
        ojson pj;
        pj["a"] = cfg.partition->a;
        pj["b"] = cfg.partition->b;
        doc["partition"] = pj;
    }
    if (cfg.instance) {
        ojson ij;
        ij["kind"] = cfg.instance->kind() == ZetaInstance::Kind::riemann ? "riemann"
                                                                         : "periodic_dirichlet";
        if (cfg.instance->kind() == ZetaInstance::Kind::periodic_dirichlet)
            ij["coeffs"] = emit_cplx_list(cfg.instance->chi().values());
        ij["use_partition"] = cfg.instance->partition().has_value();
        doc["instance"] = ij;
    }
    if (cfg.euler_spec) doc["euler_spec"] = emit_euler_spec(*cfg.euler_spec);
    if (cfg.eval) {
        ojson ej;
        ej["s"] = emit_cplx(cfg.eval->s);
        ej["tol"] = cfg.eval->tol;
        doc["eval"] = ej;
    }
    if (cfg.scan) {
        const ScanConfig& sc = *cfg.scan;
        ojson sj;
        sj["epsilon"] = std::isinf(sc.epsilon) ? ojson("inf") : ojson(sc.epsilon);
        sj["N"] = sc.N;
        sj["grid_delta"] = sc.grid_delta;
        ojson mj;
        mj["type"] = sc.mode.continuous ? "continuous" : "discrete";
        if (sc.mode.continuous) {
            mj["T"] = sc.mode.T;
            mj["tau_step"] = sc.mode.tau_step;
        }
        sj["mode"] = mj;
        ojson pj;
        pj["region"] = emit_region(sc.phi.region);
        pj["target"] = emit_target(sc.phi.target);
        pj["nonvanish_margin"] = sc.phi.nonvanish_margin;
        if (sc.phi.epsilon)
            pj["epsilon"] = std::isinf(*sc.phi.epsilon) ? ojson("inf") : ojson(*sc.phi.epsilon);
        sj["phi_slot"] = pj;
        ojson slots = ojson::array();
        for (const auto& hs : sc.slots) {
            ojson hj;
            hj["alpha"] = hs.alpha;
            if (!hs.alpha_note.empty()) hj["alpha_note"] = hs.alpha_note;
            hj["coeffs"] = emit_cplx_list(hs.B.values());
            hj["region"] = emit_region(hs.region);
            hj["target"] = emit_target(hs.target);
            if (hs.epsilon)
                hj["epsilon"] = std::isinf(*hs.epsilon) ? ojson("inf") : ojson(*hs.epsilon);
            slots.push_back(hj);
        }
        sj["hurwitz_slots"] = slots;
        doc["scan"] = sj;
    }
    if (cfg.weyl) {
        ojson wj;
        wj["index"] = emit_index(cfg.weyl->index);
        ojson alphas = ojson::array();
        for (double a : cfg.weyl->alphas) alphas.push_back(a);
        wj["alphas"] = alphas;
        ojson nl = ojson::array();
        for (std::uint64_t n : cfg.weyl->n_list) nl.push_back(n);
        wj["N_list"] = nl;
        wj["use_partition"] = cfg.weyl->use_partition;
        doc["weyl"] = wj;
    }
    if (cfg.dist) {
        ojson dj;
        dj["s0"] = emit_cplx(cfg.dist->s0);
        dj["orbit_N"] = cfg.dist->orbit_count;
        dj["haar_count"] = cfg.dist->haar_count;
        dj["trunc_n"] = cfg.dist->trunc_n;
        dj["sigma1"] = cfg.dist->sigma1;
        dj["max_points"] = cfg.dist->max_points;
        doc["dist"] = dj;
    }
    if (cfg.meanvalue) {
        ojson mj;
        mj["sigma0"] = cfg.meanvalue->sigma0;
        ojson span;
        if (cfg.meanvalue->continuous) {
            span["type"] = "continuous";
            span["T"] = cfg.meanvalue->T;
            span["step"] = cfg.meanvalue->step;
        } else {
            span["type"] = "discrete";
            span["N"] = cfg.meanvalue->n;
        }
        mj["span"] = span;
        doc["meanvalue"] = mj;
    }
    if (cfg.kappa) {
        ojson kj;
        kj["x"] = cfg.kappa->x;
        doc["kappa"] = kj;
    }
    return doc;
}

// ------------------------------------------------------------------ manifest

ojson build_manifest(const Config& cfg, const std::string& command) {
    ojson m;
    m["tool"] = TOOL_NAME;
    m["version"] = TOOL_VERSION;
    m["command"] = command;
    m["seed"] = cfg.seed;
    m["threads"] = cfg.threads;

    ojson declared;
    declared["l_set_constant"] = cfg.l_set_constant;
    declared["alphas_transcendental"] = true;
    declared["coefficients_completely_multiplicative"] =
        cfg.instance && cfg.instance->kind() == ZetaInstance::Kind::periodic_dirichlet;
    if (cfg.scan) {
        ojson notes = ojson::array();
        for (const auto& hs : cfg.scan->slots) notes.push_back(hs.alpha_note);
        declared["alpha_notes"] = notes;
    }
    m["declared"] = declared;

    ojson tol;
    tol["em_tol_floor"] = 1e-14;
    tol["pole_guard_eval"] = 1e-12;
    tol["pole_guard_scan"] = 1e-9;
    tol["degeneracy_margin"] = 1e-12;
    tol["unit_modulus"] = 1e-12;
    tol["weight_tail"] = 1e-12;
    m["tolerances"] = tol;

    m["config"] = emit_config(cfg);
    m["hash"] = fnv1a64_hex(dump_json17(m));
    return m;
}

// ------------------------------------------------------------------ plumbing

namespace {

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << data;
    if (!out) throw io_error("write failure: " + path);
}

// numeric CSV reader skipping '#' comments and one optional header line
std::vector<std::vector<double>> read_csv_columns(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open CSV: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t pos = 0;
                double v = std::stod(cell, &pos);
                row.push_back(v);
                (void)pos;
            } catch (...) {
                numeric = false;
                break;
            }
        }
        if (numeric && !row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

void write_sample_csv(const std::string& path, const DistributionSample& sample,
                      const std::string& manifest_hash) {
    std::string out = "# provenance: " + sample.provenance + "\n";
    out += "# manifest: " + manifest_hash + "\n";
    out += "re,im\n";
    for (cplx z : sample.values) out += fmt17(z.real()) + "," + fmt17(z.imag()) + "\n";
    write_file(path, out);
}

} // namespace

PlotKind plot_kind_from_string(const std::string& name) {
    if (name == "hit_timeline") return PlotKind::hit_timeline;
    if (name == "distance_histogram") return PlotKind::distance_histogram;
    if (name == "weyl_decay") return PlotKind::weyl_decay;
    if (name == "distribution_scatter") return PlotKind::distribution_scatter;
    throw io_error("unknown plot kind: " + name);
}

void emit_plot_data(const ojson& summary, PlotKind kind, const std::string& out_dir,
                    const std::string& csv_path) {
    std::string result_kind = summary.contains("kind") ? summary["kind"].get<std::string>() : "";
    auto require_kind = [&](const std::string& want) {
        if (result_kind != want)
            throw io_error("plot kind does not match result kind '" + result_kind + "'");
    };

    switch (kind) {
        case PlotKind::hit_timeline: {
            require_kind("scan");
            std::uint64_t trials = summary.at("trials").get<std::uint64_t>();
            std::vector<bool> hit(trials, false);
            for (const auto& k : summary.at("hit_indices")) hit[k.get<std::uint64_t>()] = true;
            std::string out = "# manifest: " + summary.at("manifest_hash").get<std::string>() + "\n";
            out += "k,hit\n";
            for (std::uint64_t k = 0; k < trials; ++k)
                out += std::to_string(k) + "," + (hit[k] ? "1" : "0") + "\n";
            write_file(csv_path, out);
            return;
        }
        case PlotKind::distance_histogram: {
            require_kind("scan");
            auto rows = read_csv_columns(out_dir + "/" + summary.at("detail_csv").get<std::string>());
            if (rows.empty()) throw io_error("distance histogram: empty detail CSV");
            std::size_t dcols = rows[0].size() - 2; // strip k and hit columns
            double dmax = 0.0;
            for (const auto& row : rows)
                for (std::size_t c = 1; c <= dcols; ++c)
                    if (std::isfinite(row[c])) dmax = std::max(dmax, row[c]);
            if (dmax == 0.0) dmax = 1.0;
            constexpr int BINS = 40;
            std::vector<std::vector<std::uint64_t>> counts(dcols,
                                                           std::vector<std::uint64_t>(BINS, 0));
            for (const auto& row : rows)
                for (std::size_t c = 1; c <= dcols; ++c) {
                    if (!std::isfinite(row[c])) continue;
                    int b = std::min(BINS - 1, static_cast<int>(row[c] / dmax * BINS));
                    ++counts[c - 1][b];
                }
            std::string out = "# manifest: " + summary.at("manifest_hash").get<std::string>() + "\n";
            out += "bin_lo,bin_hi";
            out += ",count_d1";
            for (std::size_t c = 1; c < dcols; ++c) out += ",count_d2" + std::to_string(c);
            out += "\n";
            for (int b = 0; b < BINS; ++b) {
                out += fmt17(dmax * b / BINS) + "," + fmt17(dmax * (b + 1) / BINS);
                for (std::size_t c = 0; c < dcols; ++c) out += "," + std::to_string(counts[c][b]);
                out += "\n";
            }
            write_file(csv_path, out);
            return;
        }
        case PlotKind::weyl_decay: {
            require_kind("weyl");
            std::string out = "# manifest: " + summary.at("manifest_hash").get<std::string>() + "\n";
            out += "N,re,im,abs,margin,bound\n";
            for (const auto& row : summary.at("rows")) {
                out += std::to_string(row.at("N").get<std::uint64_t>()) + ",";
                out += fmt17(row.at("direct")[0].get<double>()) + ",";
                out += fmt17(row.at("direct")[1].get<double>()) + ",";
                out += fmt17(row.at("abs").get<double>()) + ",";
                out += fmt17(summary.at("margin").get<double>()) + ",";
                out += fmt17(row.at("bound").get<double>()) + "\n";
            }
            write_file(csv_path, out);
            return;
        }
        case PlotKind::distribution_scatter: {
            require_kind("dist");
            auto orbit = read_csv_columns(out_dir + "/" + summary.at("orbit_csv").get<std::string>());
            auto haar = read_csv_columns(out_dir + "/" + summary.at("haar_csv").get<std::string>());
            std::string out = "# manifest: " + summary.at("manifest_hash").get<std::string>() + "\n";
            out += "which,re,im\n";
            for (const auto& row : orbit) out += "0," + fmt17(row[0]) + "," + fmt17(row[1]) + "\n";
            for (const auto& row : haar) out += "1," + fmt17(row[0]) + "," + fmt17(row[1]) + "\n";
            write_file(csv_path, out);
            return;
        }
    }
}

// ------------------------------------------------------------------ commands

namespace {

ojson run_partition(const Config& cfg) {
    if (!cfg.partition) throw config_error("partition command needs a 'partition' section");
    const PrimePartition& p = *cfg.partition;
    ojson s;
    s["a"] = p.a;
    s["b"] = p.b;
    s["h"] = p.h;
    ojson removed = ojson::array();
    for (std::uint64_t q : p.removed_primes) removed.push_back(q);
    s["removed_primes"] = removed;
    ojson ex = ojson::object();
    for (const auto& [q, e] : p.ratio_exponents) ex[std::to_string(q)] = e;
    s["ratio_exponents"] = ex;
    return s;
}

ojson run_eval(const Config& cfg) {
    if (!cfg.instance) throw config_error("eval command needs an 'instance' section");
    if (!cfg.eval) throw config_error("eval command needs an 'eval' section");
    cplx v = phi_strip_eval(*cfg.instance, cfg.eval->s, cfg.eval->tol);
    ojson s;
    s["s"] = emit_cplx(cfg.eval->s);
    s["tol"] = cfg.eval->tol;
    s["value"] = emit_cplx(v);
    s["abs"] = std::abs(v);
    return s;
}

ojson run_scan_cmd(const Config& cfg, const std::string& out_dir, const std::string& mhash) {
    if (!cfg.scan) throw config_error("scan command needs a 'scan' section");
    ScanResult res = cfg.scan->mode.continuous ? continuous_scan(*cfg.scan)
                                               : discrete_scan(*cfg.scan);

    ojson s;
    s["trials"] = res.trials;
    s["hits"] = res.hits;
    s["density"] = res.density;
    auto [lo, hi] = density_interval(res.hits, res.trials, 0.95);
    s["density_interval_95"] = ojson::array({lo, hi});
    s["mode"] = res.continuous ? "continuous" : "discrete";
    if (res.continuous) s["tau_step"] = res.tau_step;
    ojson hits = ojson::array();
    for (std::uint64_t k : res.hit_indices) hits.push_back(k);
    s["hit_indices"] = hits;
    ojson skipped = ojson::array();
    for (std::uint64_t k : res.skipped) skipped.push_back(k);
    s["skipped"] = skipped;
    s["grid_delta"] = cfg.scan->grid_delta;
    s["grid_note"] = "sup distances are grid proxies at the stated delta";
    s["evaluations"] = res.telemetry.evaluations;
    s["detail_csv"] = "scan_detail.csv";

    std::string csv = "# manifest: " + mhash + "\n";
    csv += "k,d_1";
    for (std::size_t j = 0; j < res.d2.size(); ++j) csv += ",d_2" + std::to_string(j + 1);
    csv += ",hit\n";
    std::vector<bool> hitmask(res.trials, false);
    for (std::uint64_t k : res.hit_indices) hitmask[k] = true;
    for (std::uint64_t k = 0; k < res.trials; ++k) {
        csv += std::to_string(k) + "," + fmt17(res.d1[k]);
        for (const auto& col : res.d2) csv += "," + fmt17(col[k]);
        csv += hitmask[k] ? ",1\n" : ",0\n";
    }
    write_file(out_dir + "/scan_detail.csv", csv);

    s["kind"] = "scan";
    s["manifest_hash"] = mhash;
    emit_plot_data(s, PlotKind::hit_timeline, out_dir, out_dir + "/hit_timeline.csv");
    emit_plot_data(s, PlotKind::distance_histogram, out_dir, out_dir + "/distance_histogram.csv");

    ojson timing;
    timing["seconds"] = res.telemetry.seconds;
    timing["evals_per_second"] = res.telemetry.evals_per_second;
    s["timing"] = timing;
    return s;
}

ojson run_weyl(const Config& cfg, const std::string& out_dir, const std::string& mhash) {
    if (!cfg.weyl) throw config_error("weyl command needs a 'weyl' section");
    const auto& w = *cfg.weyl;
    double h = cfg.partition->h;
    std::optional<PrimePartition> part = w.use_partition ? cfg.partition : std::nullopt;

    PhaseInfo ph = phase_theta(w.index, h, w.alphas);
    DegeneracyCheck dc = check_degeneracy(w.index, part, h, w.alphas);

    ojson s;
    s["theta"] = ph.theta;
    s["margin"] = ph.margin;
    s["degenerate"] = dc.degenerate;
    s["degeneracy_exact"] = dc.exact;

    ojson rows = ojson::array();
    for (std::uint64_t n : w.n_list) {
        cplx direct = weyl_sum_direct(w.index, h, w.alphas, n);
        cplx closed = weyl_sum_closed(w.index, h, w.alphas, n, part);
        ojson row;
        row["N"] = n;
        row["direct"] = emit_cplx(direct);
        row["closed"] = emit_cplx(closed);
        row["abs"] = std::abs(direct);
        row["bound"] = weyl_decay_bound(ph.margin, n);
        rows.push_back(row);
    }
    s["rows"] = rows;
    s["kind"] = "weyl";
    s["manifest_hash"] = mhash;
    emit_plot_data(s, PlotKind::weyl_decay, out_dir, out_dir + "/weyl_decay.csv");
    return s;
}

ojson run_dist(const Config& cfg, const std::string& out_dir, const std::string& mhash) {
    if (!cfg.dist) throw config_error("dist command needs a 'dist' section");
    const auto& d = *cfg.dist;

    DistributionSample orbit =
        shift_orbit_sample(*cfg.instance, d.s0, cfg.partition->h, d.orbit_count, cfg.threads);
    DistributionSample haar = haar_twisted_sample(*cfg.instance, d.s0, d.haar_count, cfg.seed,
                                                  d.trunc_n, d.sigma1, cfg.threads);
    DistributionComparison cmp = distribution_compare(orbit, haar, d.max_points);

    write_sample_csv(out_dir + "/dist_orbit.csv", orbit, mhash);
    write_sample_csv(out_dir + "/dist_haar.csv", haar, mhash);

    ojson s;
    s["note"] = "HEURISTIC weak-convergence diagnostic; no significance level attached";
    s["energy_distance"] = cmp.energy;
    s["ks_re"] = cmp.ks_re;
    s["ks_im"] = cmp.ks_im;
    s["energy_points_orbit"] = cmp.used_a;
    s["energy_points_haar"] = cmp.used_b;
    s["orbit_provenance"] = orbit.provenance;
    s["haar_provenance"] = haar.provenance;
    s["orbit_csv"] = "dist_orbit.csv";
    s["haar_csv"] = "dist_haar.csv";
    s["kind"] = "dist";
    s["manifest_hash"] = mhash;
    emit_plot_data(s, PlotKind::distribution_scatter, out_dir, out_dir + "/distribution_scatter.csv");
    return s;
}

ojson run_meanvalue(const Config& cfg) {
    if (!cfg.meanvalue) throw config_error("meanvalue command needs a 'meanvalue' section");
    const auto& m = *cfg.meanvalue;
    MeanSquare ms = m.continuous
                        ? mean_square_continuous(*cfg.instance, m.sigma0, m.T, m.step, cfg.threads)
                        : mean_square_discrete(*cfg.instance, m.sigma0, cfg.partition->h, m.n,
                                               cfg.threads);
    ojson s;
    s["sigma0"] = m.sigma0;
    s["span"] = m.continuous ? "continuous" : "discrete";
    s["statistic"] = ms.statistic;
    s["samples"] = ms.samples;
    if (ms.reference) {
        s["reference"] = *ms.reference;
        s["ratio"] = ms.statistic / *ms.reference;
    }
    return s;
}

ojson run_kappa(const Config& cfg) {
    if (!cfg.kappa) throw config_error("kappa command needs a 'kappa' section");
    ojson s;
    s["x"] = cfg.kappa->x;
    s["kappa"] = steuding_kappa(*cfg.euler_spec, cfg.kappa->x);
    return s;
}

} // namespace

ojson run_command(const std::string& command, const Config& cfg, const std::string& out_dir) {
    fs::create_directories(out_dir);
    ojson manifest = build_manifest(cfg, command);
    std::string mhash = manifest["hash"].get<std::string>();

    auto t0 = std::chrono::steady_clock::now();
    ojson body;
    if (command == "partition")
        body = run_partition(cfg);
    else if (command == "eval")
        body = run_eval(cfg);
    else if (command == "scan")
        body = run_scan_cmd(cfg, out_dir, mhash);
    else if (command == "weyl")
        body = run_weyl(cfg, out_dir, mhash);
    else if (command == "dist")
        body = run_dist(cfg, out_dir, mhash);
    else if (command == "meanvalue")
        body = run_meanvalue(cfg);
    else if (command == "kappa")
        body = run_kappa(cfg);
    else
        throw config_error("unknown command: " + command);
    auto t1 = std::chrono::steady_clock::now();

    ojson summary;
    summary["kind"] = command;
    summary["manifest_hash"] = mhash;
    for (auto it = body.begin(); it != body.end(); ++it) {
        if (it.key() == "kind" || it.key() == "manifest_hash") continue;
        summary[it.key()] = it.value();
    }
    ojson timing = summary.contains("timing") ? summary["timing"] : ojson::object();
    summary.erase("timing");
    timing["wall_seconds"] = std::chrono::duration<double>(t1 - t0).count();
    summary["timing"] = timing;

    write_file(out_dir + "/manifest.json", dump_json17(manifest));
    write_file(out_dir + "/" + command + "_summary.json", dump_json17(summary));
    return summary;
}

int exit_code_for_current_exception() {
    try {
        throw;
    } catch (const config_error&) {
        return 2;
    } catch (const pole_error&) {
        return 4;
    } catch (const degeneracy_error&) {
        return 5;
    } catch (const convergence_domain_error&) {
        return 6;
    } catch (const singular_factor_error&) {
        return 7;
    } catch (const io_error&) {
        return 8;
    } catch (const target_error&) {
        return 9;
    } catch (const overflow_error&) {
        return 10;
    } catch (const unsupported_instance_error&) {
        return 11;
    } catch (const domain_error&) {
        return 3;
    } catch (...) {
        return 1;
    }
}

} // namespace zetalab
