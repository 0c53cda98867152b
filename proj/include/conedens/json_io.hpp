#pragma once

#include <json.hpp>

#include "conedens/density.hpp"
#include "conedens/pointset.hpp"
#include "conedens/theorems.hpp"

namespace conedens {

using Json = nlohmann::json;

Json json_point(const Point& p);                 // [x1,...,xn]; 1D: plain int
Json json_points(const std::vector<Point>& v);
Json json_box(const Box& b);                     // [m1,...,mn]
Json json_pointset(const PointSet& s);           // sorted coordinate list
Json json_ideal(const OrderIdeal& j);
Json json_extension(const LinearExtension& e, ExtensionRule rule);

Json json_density(const DensityReport& r);
Json json_decomposition(const Decomposition& d);
Json json_cover(const CoverReport& r);
Json json_partition(const PartitionCertificate& c);
Json json_inequality(const InequalityReport& r);
Json json_product_bound(const ProductBoundReport& r);
Json json_basis(const BasisReport& r);
Json json_mann(const MannReport& r);

}  // namespace conedens
