#include "pcx/json_io.hpp"

#include <set>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& reason)
{
    fail(errc::validation_error, path + ": " + reason);
}

void check_keys(const Json& j, const std::string& path, const std::set<std::string>& allowed)
{
    if (!j.is_object())
        bad(path, "expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            bad(path + "/" + key, "unknown field");
}

const Json& get_required(const Json& j, const std::string& path, const std::string& key)
{
    auto it = j.find(key);
    if (it == j.end())
        bad(path + "/" + key, "missing field");
    return *it;
}

int get_int(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        bad(path, "expected an integer");
    return j.get<int>();
}

std::string get_string(const Json& j, const std::string& path)
{
    if (!j.is_string())
        bad(path, "expected a string");
    return j.get<std::string>();
}

int parse_degree_key(const std::string& key, const std::string& path)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(key, &used);
        if (used != key.size())
            throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        bad(path, "degree key '" + key + "' is not an integer");
    }
}

Scalar scalar_from_json(const RingPtr& ring, const Json& j, const std::string& path)
{
    if (!j.is_string())
        bad(path, "scalars are strings in the exact grammar");
    try {
        return Scalar::parse(ring, j.get<std::string>());
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

Json ring_to_json(const RingPtr& r)
{
    Json j = Json::object();
    switch (r->kind()) {
        case RingKind::Rationals: j["kind"] = "rationals"; break;
        case RingKind::PrimeField:
            j["kind"] = "prime_field";
            j["p"] = r->prime();
            break;
        case RingKind::Polynomial:
            j["kind"] = "polynomial";
            j["base"] = ring_to_json(r->base());
            j["vars"] = r->vars();
            break;
        case RingKind::RationalFunctions:
            j["kind"] = "rational_functions";
            j["base"] = ring_to_json(r->base());
            j["vars"] = r->vars();
            break;
        case RingKind::DualNumbers:
            j["kind"] = "dual_numbers";
            j["base"] = ring_to_json(r->base());
            break;
    }
    return j;
}

RingPtr ring_from_json(const Json& j, const std::string& path)
{
    if (!j.is_object())
        bad(path, "expected a ring object");
    std::string kind = get_string(get_required(j, path, "kind"), path + "/kind");
    try {
        if (kind == "rationals") {
            check_keys(j, path, {"kind"});
            return Ring::rationals();
        }
        if (kind == "prime_field") {
            check_keys(j, path, {"kind", "p"});
            const Json& p = get_required(j, path, "p");
            if (!p.is_number_integer())
                bad(path + "/p", "expected an integer");
            return Ring::prime_field(p.get<std::int64_t>());
        }
        if (kind == "polynomial" || kind == "rational_functions") {
            check_keys(j, path, {"kind", "base", "vars"});
            RingPtr base = ring_from_json(get_required(j, path, "base"), path + "/base");
            const Json& vars = get_required(j, path, "vars");
            if (!vars.is_array())
                bad(path + "/vars", "expected an array of variable names");
            std::vector<std::string> names;
            for (std::size_t i = 0; i < vars.size(); ++i)
                names.push_back(get_string(vars[i], path + "/vars/" + std::to_string(i)));
            return kind == "polynomial" ? Ring::polynomial(base, names)
                                        : Ring::rational_functions(base, names);
        }
        if (kind == "dual_numbers") {
            check_keys(j, path, {"kind", "base"});
            return Ring::dual_numbers(ring_from_json(get_required(j, path, "base"), path + "/base"));
        }
    } catch (const Error& e) {
        if (e.code() == errc::invalid_ring)
            bad(path, e.what());
        throw;
    }
    bad(path + "/kind", "unknown ring kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Matrices, complexes, maps
// ---------------------------------------------------------------------------

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const RingPtr& ring, std::size_t rows, std::size_t cols, const Json& j,
                        const std::string& path)
{
    if (!j.is_array())
        bad(path, "expected an array of rows");
    if (j.size() != rows)
        bad(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        std::string rpath = path + "/" + std::to_string(i);
        if (!row.is_array())
            bad(rpath, "expected an array of entries");
        if (row.size() != cols)
            bad(rpath, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(i, c, scalar_from_json(ring, row[c], rpath + "/" + std::to_string(c)));
    }
    return m;
}

Json complex_to_json(const Complex& c)
{
    Json j = Json::object();
    j["lo"] = c.lo();
    j["hi"] = c.hi();
    Json ranks = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (c.rank_at(n) > 0)
            ranks[std::to_string(n)] = c.rank_at(n);
    j["ranks"] = std::move(ranks);
    Json diffs = Json::object();
    for (int n = c.lo(); n < c.hi(); ++n) {
        Matrix d = c.diff_at(n);
        if (d.rows() > 0 && d.cols() > 0 && !d.is_zero())
            diffs[std::to_string(n)] = matrix_to_json(d);
    }
    j["diffs"] = std::move(diffs);
    return j;
}

Complex complex_from_json(const RingPtr& ring, const Json& j, const std::string& path)
{
    check_keys(j, path, {"lo", "hi", "ranks", "diffs"});
    int lo = get_int(get_required(j, path, "lo"), path + "/lo");
    int hi = get_int(get_required(j, path, "hi"), path + "/hi");
    if (lo > hi)
        bad(path, "lo > hi");

    std::map<int, std::size_t> ranks;
    const Json& jr = get_required(j, path, "ranks");
    if (!jr.is_object())
        bad(path + "/ranks", "expected an object keyed by degree");
    for (const auto& [key, value] : jr.items()) {
        std::string kpath = path + "/ranks/" + key;
        int n = parse_degree_key(key, kpath);
        if (n < lo || n > hi)
            bad(kpath, "degree outside [lo, hi]");
        if (!value.is_number_integer() || value.get<long long>() < 0)
            bad(kpath, "expected a nonnegative integer rank");
        ranks[n] = value.get<std::size_t>();
    }

    auto rank_at = [&](int n) -> std::size_t {
        auto it = ranks.find(n);
        return it == ranks.end() ? 0 : it->second;
    };

    std::map<int, Matrix> diffs;
    const Json& jd = get_required(j, path, "diffs");
    if (!jd.is_object())
        bad(path + "/diffs", "expected an object keyed by degree");
    for (const auto& [key, value] : jd.items()) {
        std::string kpath = path + "/diffs/" + key;
        int n = parse_degree_key(key, kpath);
        if (n < lo || n >= hi)
            bad(kpath, "differential degree outside [lo, hi)");
        diffs[n] = matrix_from_json(ring, rank_at(n + 1), rank_at(n), value, kpath);
    }

    Complex c(ring, lo, hi, std::move(ranks), std::move(diffs));
    try {
        validate(c);
    } catch (const Error& e) {
        bad(path + "/diffs", e.what());
    }
    return c;
}

Json components_to_json(const std::map<int, Matrix>& comps)
{
    Json j = Json::object();
    for (const auto& [n, m] : comps)
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero())
            j[std::to_string(n)] = matrix_to_json(m);
    return j;
}

Json graded_map_to_json(const NamedMap& m)
{
    Json j = Json::object();
    j["source"] = m.source;
    j["target"] = m.target;
    j["degree"] = m.map.degree();
    j["components"] = components_to_json(m.map.components());
    return j;
}

Json ext_class_to_json(const NamedExtClass& e)
{
    Json j = Json::object();
    j["source"] = e.source;
    j["target"] = e.target;
    j["degree"] = e.cls.degree();
    j["cocycle"] = components_to_json(e.cls.cocycle().components());
    return j;
}

namespace {

std::map<int, Matrix> components_from_json(const RingPtr& ring, const Complex& source,
                                           const Complex& target, int degree, const Json& j,
                                           const std::string& path)
{
    if (!j.is_object())
        bad(path, "expected an object keyed by degree");
    std::map<int, Matrix> comps;
    for (const auto& [key, value] : j.items()) {
        std::string kpath = path + "/" + key;
        int n = parse_degree_key(key, kpath);
        comps[n] = matrix_from_json(ring, target.rank_at(n + degree), source.rank_at(n), value,
                                    kpath);
    }
    return comps;
}

const Complex& lookup_complex(const Bundle& b, const std::string& name, const std::string& path)
{
    auto it = b.complexes.find(name);
    if (it == b.complexes.end())
        bad(path, "unknown complex '" + name + "'");
    return it->second;
}

} // namespace

// ---------------------------------------------------------------------------
// Bundle
// ---------------------------------------------------------------------------

Bundle parse_bundle(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    check_keys(j, "", {"ring", "complexes", "maps", "ext_classes", "payload"});

    Bundle b;
    b.ring = ring_from_json(get_required(j, "", "ring"), "/ring");

    if (auto it = j.find("complexes"); it != j.end()) {
        if (!it->is_object())
            bad("/complexes", "expected an object");
        for (const auto& [name, cj] : it->items())
            b.complexes.emplace(name, complex_from_json(b.ring, cj, "/complexes/" + name));
    }

    if (auto it = j.find("maps"); it != j.end()) {
        if (!it->is_object())
            bad("/maps", "expected an object");
        for (const auto& [name, mj] : it->items()) {
            std::string path = "/maps/" + name;
            check_keys(mj, path, {"source", "target", "degree", "components", "assert_chain_map"});
            std::string sname = get_string(get_required(mj, path, "source"), path + "/source");
            std::string tname = get_string(get_required(mj, path, "target"), path + "/target");
            int degree = get_int(get_required(mj, path, "degree"), path + "/degree");
            const Complex& source = lookup_complex(b, sname, path + "/source");
            const Complex& target = lookup_complex(b, tname, path + "/target");
            auto comps = components_from_json(b.ring, source, target, degree,
                                              get_required(mj, path, "components"),
                                              path + "/components");
            GradedMap map(source, target, degree, std::move(comps));
            if (auto ac = mj.find("assert_chain_map"); ac != mj.end()) {
                if (!ac->is_boolean())
                    bad(path + "/assert_chain_map", "expected a boolean");
                if (ac->get<bool>() && !map.is_chain_map())
                    bad(path, "map asserted to be a chain map but is not");
            }
            b.maps.emplace(name, NamedMap{std::move(sname), std::move(tname), std::move(map)});
        }
    }

    if (auto it = j.find("ext_classes"); it != j.end()) {
        if (!it->is_object())
            bad("/ext_classes", "expected an object");
        for (const auto& [name, ej] : it->items()) {
            std::string path = "/ext_classes/" + name;
            check_keys(ej, path, {"source", "target", "degree", "cocycle"});
            std::string sname = get_string(get_required(ej, path, "source"), path + "/source");
            std::string tname = get_string(get_required(ej, path, "target"), path + "/target");
            int degree = get_int(get_required(ej, path, "degree"), path + "/degree");
            const Complex& source = lookup_complex(b, sname, path + "/source");
            const Complex& target = lookup_complex(b, tname, path + "/target");
            auto comps = components_from_json(b.ring, source, target, degree,
                                              get_required(ej, path, "cocycle"),
                                              path + "/cocycle");
            try {
                ExtClass cls(GradedMap(source, target, degree, std::move(comps)));
                b.ext_classes.emplace(name,
                                      NamedExtClass{std::move(sname), std::move(tname), cls});
            } catch (const Error& e) {
                bad(path + "/cocycle", e.what());
            }
        }
    }

    if (auto it = j.find("payload"); it != j.end()) {
        if (!it->is_object())
            bad("/payload", "expected an object");
        b.payload = *it;
    }
    return b;
}

Json bundle_to_json(const Bundle& b)
{
    Json j = Json::object();
    j["ring"] = ring_to_json(b.ring);
    Json complexes = Json::object();
    for (const auto& [name, c] : b.complexes)
        complexes[name] = complex_to_json(c);
    j["complexes"] = std::move(complexes);
    Json maps = Json::object();
    for (const auto& [name, m] : b.maps)
        maps[name] = graded_map_to_json(m);
    j["maps"] = std::move(maps);
    if (!b.ext_classes.empty()) {
        Json exts = Json::object();
        for (const auto& [name, e] : b.ext_classes)
            exts[name] = ext_class_to_json(e);
        j["ext_classes"] = std::move(exts);
    }
    if (!b.payload.empty())
        j["payload"] = b.payload;
    return j;
}

std::string render_bundle(const Bundle& b)
{
    return bundle_to_json(b).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Report pieces
// ---------------------------------------------------------------------------

Json scalar_map_to_json(const std::map<std::string, Scalar>& point)
{
    Json j = Json::object();
    for (const auto& [name, value] : point)
        j[name] = value.str();
    return j;
}

Json dims_to_json(const std::map<int, std::size_t>& dims)
{
    Json j = Json::object();
    for (const auto& [n, d] : dims)
        j[std::to_string(n)] = d;
    return j;
}

Json trivialization_report_to_json(const TrivializationReport& rep)
{
    Json j = Json::object();
    j["point"] = scalar_map_to_json(rep.point);
    j["specialized_map"] = Json::object();
    j["specialized_map"]["degree"] = 0;
    j["specialized_map"]["components"] = components_to_json(rep.specialized_map.components());
    j["certificate"] = dims_to_json(rep.certificate);
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    return j;
}

} // namespace pcx
