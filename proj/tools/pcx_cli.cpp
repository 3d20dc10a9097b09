#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcx/aut.hpp"
#include "pcx/dold_kan.hpp"
#include "pcx/errors.hpp"
#include "pcx/json_io.hpp"

namespace {

using namespace pcx;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::validation_error, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Bundle load_bundle(const std::string& path)
{
    return parse_bundle(read_file(path));
}

const Complex& named_complex(const Bundle& b, const std::string& name)
{
    auto it = b.complexes.find(name);
    if (it == b.complexes.end())
        fail(errc::validation_error, "bundle has no complex named '" + name + "'");
    return it->second;
}

const NamedMap& named_map(const Bundle& b, const std::string& name)
{
    auto it = b.maps.find(name);
    if (it == b.maps.end())
        fail(errc::validation_error, "bundle has no map named '" + name + "'");
    return it->second;
}

const NamedExtClass& named_ext(const Bundle& b, const std::string& name)
{
    auto it = b.ext_classes.find(name);
    if (it == b.ext_classes.end())
        fail(errc::validation_error, "bundle has no ext class named '" + name + "'");
    return it->second;
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

// --- command implementations (return the process exit code) ---------------

int cmd_cohomology(const Bundle& b, const std::string& name)
{
    Json j;
    j["command"] = "cohomology";
    j["complex"] = name;
    j["cohomology"] = dims_to_json(cohomology_dims(named_complex(b, name)));
    emit(j);
    return 0;
}

int cmd_is_qiso(const Bundle& b, const std::string& name)
{
    const NamedMap& m = named_map(b, name);
    Json j;
    j["command"] = "is-qiso";
    j["map"] = name;
    j["is_qiso"] = is_qiso(m.map);
    emit(j);
    return 0;
}

int cmd_ext(const Bundle& b, const std::string& src, const std::string& tgt,
            const std::vector<std::string>& compare)
{
    Json j;
    j["command"] = "ext";
    if (!compare.empty()) {
        const NamedExtClass& a = named_ext(b, compare[0]);
        const NamedExtClass& c = named_ext(b, compare[1]);
        j["compare"] = Json::array({compare[0], compare[1]});
        j["equal"] = ext_equal(a.cls, c.cls);
        emit(j);
        return 0;
    }
    j["source"] = src;
    j["target"] = tgt;
    j["ext_dims"] = dims_to_json(ext_dims(named_complex(b, src), named_complex(b, tgt)));
    emit(j);
    return 0;
}

int cmd_tor_amplitude(const Bundle& b, const std::string& name)
{
    auto amp = tor_amplitude(named_complex(b, name));
    Json j;
    j["command"] = "tor-amplitude";
    j["complex"] = name;
    if (amp)
        j["tor_amplitude"] = Json::array({amp->first, amp->second});
    else
        j["tor_amplitude"] = "EMPTY";
    emit(j);
    return 0;
}

int cmd_cone(const Bundle& b, const std::string& name)
{
    const NamedMap& m = named_map(b, name);
    ConeResult c = cone(m.map);
    Json j;
    j["command"] = "cone";
    j["map"] = name;
    j["cone"] = complex_to_json(c.cone);
    j["from_target"] = graded_map_to_json(NamedMap{m.target, "cone", c.from_target});
    j["to_shifted_source"] =
        graded_map_to_json(NamedMap{"cone", m.source + "[1]", c.to_shifted_source});
    emit(j);
    return 0;
}

int cmd_truncate(const Bundle& b, const std::string& name, const std::string& direction, int at)
{
    const Complex& c = named_complex(b, name);
    Complex t;
    if (direction == "le")
        t = truncate_le(c, at);
    else if (direction == "ge")
        t = truncate_ge(c, at);
    else
        fail(errc::validation_error, "--direction must be 'le' or 'ge'");
    Json j;
    j["command"] = "truncate";
    j["complex"] = name;
    j["direction"] = direction;
    j["at"] = at;
    j["truncated"] = complex_to_json(t);
    emit(j);
    return 0;
}

const GradedMap& witness_map(const Bundle& b, const Json& w, const std::string& key)
{
    auto it = w.find(key);
    if (it == w.end())
        fail(errc::validation_error, "witness is missing component '" + key + "'");
    if (!it->is_string())
        fail(errc::validation_error, "witness component '" + key + "' must name a map");
    return named_map(b, it->get<std::string>()).map;
}

int cmd_dk_verify(const Bundle& b)
{
    auto it = b.payload.find("witness");
    if (it == b.payload.end())
        fail(errc::validation_error, "dk-verify needs payload/witness");
    const Json& w = *it;
    if (!w.is_object())
        fail(errc::validation_error, "payload/witness must be an object");
    auto kind_it = w.find("kind");
    if (kind_it == w.end() || !kind_it->is_string())
        fail(errc::validation_error, "payload/witness/kind must be a string");
    std::string kind = kind_it->get<std::string>();

    VerifyReport rep;
    if (kind == "G1_VERTEX") {
        rep = verify_g1_vertex(G1Vertex{witness_map(b, w, "phi")});
    } else if (kind == "G1_EDGE") {
        rep = verify_g1_edge(
            G1Edge{witness_map(b, w, "phi"), witness_map(b, w, "psi"), witness_map(b, w, "H")});
    } else if (kind == "G2_VERTEX") {
        rep = verify_g2_vertex(G2Vertex{witness_map(b, w, "phi01"), witness_map(b, w, "phi12"),
                                        witness_map(b, w, "phi02"), witness_map(b, w, "alpha")});
    } else if (kind == "G2_EDGE") {
        G2Vertex top{witness_map(b, w, "phi01"), witness_map(b, w, "phi12"),
                     witness_map(b, w, "phi02"), witness_map(b, w, "alpha")};
        G2Vertex bottom{witness_map(b, w, "psi01"), witness_map(b, w, "psi12"),
                        witness_map(b, w, "psi02"), witness_map(b, w, "beta")};
        rep = verify_g2_edge(G2Edge{top, bottom, witness_map(b, w, "H01"),
                                    witness_map(b, w, "H02"), witness_map(b, w, "H12"),
                                    witness_map(b, w, "theta")});
    } else {
        fail(errc::validation_error, "unknown witness kind '" + kind + "'");
    }

    Json j;
    j["command"] = "dk-verify";
    j["kind"] = kind;
    j["ok"] = rep.ok;
    if (!rep.ok) {
        j["failed_equation"] = rep.failed_equation;
        j["degree"] = rep.degree;
    }
    emit(j);
    return rep.ok ? 0 : 2;
}

// Square-zero bundles carry E_total, F_total over k[eps] and phi0 between
// them with eps-free entries standing for a map of the reductions.
struct SquareZeroInput {
    DeformedComplex E, F;
    GradedMap phi0;
};

SquareZeroInput square_zero_input(const Bundle& b)
{
    DeformedComplex E = make_deformed(named_complex(b, "E_total"));
    DeformedComplex F = make_deformed(named_complex(b, "F_total"));
    const NamedMap& raw = named_map(b, "phi0");
    if (raw.source != "E_total" || raw.target != "F_total" || raw.map.degree() != 0)
        fail(errc::validation_error, "phi0 must be a degree-0 map E_total -> F_total");
    for (const auto& [n, m] : raw.map.components())
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).eps_part().is_zero())
                    fail(errc::validation_error,
                         "phi0 entries must be eps-free (a map of the reductions)");
    return SquareZeroInput{E, F, reduce(raw.map)};
}

Json ext_class_report(const ExtClass& cls)
{
    if (cls.is_zero())
        return Json("zero");
    Json j = Json::object();
    j["degree"] = cls.degree();
    j["cocycle"] = components_to_json(cls.cocycle().components());
    return j;
}

int cmd_obstruct(const Bundle& b)
{
    SquareZeroInput in = square_zero_input(b);
    ExtClass cls = obstruction(in.E, in.F, in.phi0);
    Json j;
    j["command"] = "obstruct";
    j["class"] = ext_class_report(cls);
    emit(j);
    return 0;
}

int cmd_lift(const Bundle& b)
{
    SquareZeroInput in = square_zero_input(b);
    ExtClass cls = obstruction(in.E, in.F, in.phi0);
    auto lifted = lift(in.E, in.F, in.phi0);
    Json j;
    j["command"] = "lift";
    j["class"] = ext_class_report(cls);
    if (lifted) {
        Json m = Json::object();
        m["degree"] = 0;
        m["components"] = components_to_json(lifted->components());
        j["lift"] = std::move(m);
    } else {
        j["lift"] = nullptr;
    }
    emit(j);
    return lifted ? 0 : 2;
}

int cmd_descend(const Bundle& b, std::uint64_t seed, std::uint64_t sample_bound,
                std::uint64_t max_trials, bool certify)
{
    Complex P = constants_of(named_complex(b, "P"));
    Complex Q = constants_of(named_complex(b, "Q"));
    const NamedMap& f = named_map(b, "f");
    TrivializationReport rep = descend(P, Q, f.map, seed, sample_bound, max_trials, certify);
    Json j;
    j["command"] = "descend";
    j["report"] = trivialization_report_to_json(rep);
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pcx - exact computations with strictly perfect complexes"};
    app.require_subcommand(1);

    std::string input;
    std::string complex_name, map_name, source_name, target_name, direction;
    std::vector<std::string> compare;
    int at = 0;
    std::uint64_t seed = 0, sample_bound = 100, max_trials = 64;
    bool certify = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "bundle JSON file")->required();
    };

    CLI::App* c_coh = app.add_subcommand("cohomology", "cohomology dimensions of a complex");
    add_input(c_coh);
    c_coh->add_option("--complex", complex_name)->required();

    CLI::App* c_qiso = app.add_subcommand("is-qiso", "decide quasi-isomorphism via the cone");
    add_input(c_qiso);
    c_qiso->add_option("--map", map_name)->required();

    CLI::App* c_ext = app.add_subcommand("ext", "Ext dimensions or ext-class comparison");
    add_input(c_ext);
    c_ext->add_option("--source", source_name);
    c_ext->add_option("--target", target_name);
    c_ext->add_option("--compare", compare, "two ext class names")->expected(2);

    CLI::App* c_tor = app.add_subcommand("tor-amplitude", "minimal cohomology window");
    add_input(c_tor);
    c_tor->add_option("--complex", complex_name)->required();

    CLI::App* c_cone = app.add_subcommand("cone", "mapping cone and its canonical maps");
    add_input(c_cone);
    c_cone->add_option("--map", map_name)->required();

    CLI::App* c_trunc = app.add_subcommand("truncate", "smart truncation");
    add_input(c_trunc);
    c_trunc->add_option("--complex", complex_name)->required();
    c_trunc->add_option("--direction", direction, "le or ge")->required();
    c_trunc->add_option("--at", at)->required();

    CLI::App* c_dk = app.add_subcommand("dk-verify", "verify an automorphism-group witness");
    add_input(c_dk);

    CLI::App* c_obs = app.add_subcommand("obstruct", "square-zero lifting obstruction class");
    add_input(c_obs);

    CLI::App* c_lift = app.add_subcommand("lift", "lift a map along a square-zero extension");
    add_input(c_lift);

    CLI::App* c_desc = app.add_subcommand("descend", "trivialize a polynomial-coefficient qiso");
    add_input(c_desc);
    c_desc->add_option("--seed", seed)->required();
    c_desc->add_option("--sample-bound", sample_bound);
    c_desc->add_option("--max-trials", max_trials);
    c_desc->add_flag("--certify-generic", certify,
                     "certify U_f nonempty at the generic point first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3; // usage problems are input errors
    }

    try {
        Bundle b = load_bundle(input);
        if (c_coh->parsed())
            return cmd_cohomology(b, complex_name);
        if (c_qiso->parsed())
            return cmd_is_qiso(b, map_name);
        if (c_ext->parsed()) {
            if (compare.empty() && (source_name.empty() || target_name.empty()))
                fail(errc::validation_error, "ext needs --source and --target, or --compare");
            return cmd_ext(b, source_name, target_name, compare);
        }
        if (c_tor->parsed())
            return cmd_tor_amplitude(b, complex_name);
        if (c_cone->parsed())
            return cmd_cone(b, map_name);
        if (c_trunc->parsed())
            return cmd_truncate(b, complex_name, direction, at);
        if (c_dk->parsed())
            return cmd_dk_verify(b);
        if (c_obs->parsed())
            return cmd_obstruct(b);
        if (c_lift->parsed())
            return cmd_lift(b);
        if (c_desc->parsed())
            return cmd_descend(b, seed, sample_bound, max_trials, certify);
        fail(errc::internal, "no subcommand dispatched");
    } catch (const Error& e) {
        std::cerr << e.what() << std::endl;
        switch (e.code()) {
            case errc::no_point_found: return 2;
            case errc::internal: return 1;
            default: return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "INTERNAL: " << e.what() << std::endl;
        return 1;
    }
}
