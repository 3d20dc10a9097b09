#ifndef PCX_JSON_IO_HPP
#define PCX_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "pcx/deformation.hpp"
#include "pcx/descent.hpp"

namespace pcx {

using Json = nlohmann::json;

/// A named chain/graded map inside a bundle; endpoints are complex names.
struct NamedMap {
    std::string source, target;
    GradedMap map;
};

struct NamedExtClass {
    std::string source, target;
    ExtClass cls;
};

/// The on-disk exchange format: one ring, named complexes, named maps and
/// ext classes over them, plus a command-specific payload object. Parsing is
/// strict: unknown fields are rejected, every complex is validated, scalars
/// use the canonical text grammar.
struct Bundle {
    RingPtr ring;
    std::map<std::string, Complex> complexes;
    std::map<std::string, NamedMap> maps;
    std::map<std::string, NamedExtClass> ext_classes;
    Json payload = Json::object();
};

Bundle parse_bundle(const std::string& text);
Json bundle_to_json(const Bundle& b);
std::string render_bundle(const Bundle& b);

Json ring_to_json(const RingPtr& r);
RingPtr ring_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const RingPtr& ring, std::size_t rows, std::size_t cols, const Json& j,
                        const std::string& path);

Json complex_to_json(const Complex& c);
Complex complex_from_json(const RingPtr& ring, const Json& j, const std::string& path);

Json components_to_json(const std::map<int, Matrix>& comps);
Json graded_map_to_json(const NamedMap& m);
Json ext_class_to_json(const NamedExtClass& e);

Json scalar_map_to_json(const std::map<std::string, Scalar>& point);
Json dims_to_json(const std::map<int, std::size_t>& dims);
Json trivialization_report_to_json(const TrivializationReport& rep);

} // namespace pcx

#endif
