#ifndef COARSE_IO_HPP
#define COARSE_IO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "coarse/coarsemaps.hpp"
#include "coarse/cones.hpp"
#include "coarse/ends.hpp"
#include "coarse/homotopy.hpp"
#include "coarse/obstruction.hpp"
#include "coarse/ray.hpp"
#include "coarse/space.hpp"
#include "coarse/trees.hpp"

namespace coarse {

nlohmann::json read_json_file(const std::string& path);

// Ray specs:
//   geo:<pattern>        periodic geodesic ray. Patterns are comma-separated
//                        child indices ("0", "0,1"), a free-group word ("ab"),
//                        "1" / "-1" on the line, a direction vector ("1,0")
//                        on grids, "L" / "R" on the staircase, or the hair
//                        index on a hairy tree.
//   detour:<pattern>:<k> the same ray with out-and-back detours of <= k edges
//                        (trees only; seeded)
//   file:<path>          one vertex per line, or "<index> <vertex>" pairs
VertexRay parse_ray_spec(const SpacePtr& space, const std::string& spec, std::int64_t length,
                         std::uint64_t seed = 1);

// {"rows": [["L3", ...], ...]} with formatted vertex names.
LatticeHomotopy read_lattice_homotopy(const SpaceOracle& space, const nlohmann::json& doc);
nlohmann::json lattice_homotopy_json(const SpaceOracle& space, const LatticeHomotopy& phi);

// {"domain": <space spec>, "codomain": <space spec>, "pairs": [["x", "y"], ...]}
MapTrace read_map_trace(const nlohmann::json& doc);

nlohmann::json vertices_json(const SpaceOracle& space, const std::vector<VertexId>& vs);
nlohmann::json ends_json(const SpaceOracle& space, const EndsProfile& profile, const EndCount& count);
nlohmann::json verdict_json(const SpaceOracle& space, const EndVerdict& verdict);
nlohmann::json pi0_json(const SpaceOracle& space, const Pi0Verdict& verdict);
nlohmann::json cone_json(const ConeReport& report);
nlohmann::json stability_json(const StabilityReport& scan);
nlohmann::json refutation_json(const SpaceOracle& space, const Refutation& ref);
nlohmann::json control_json(const ControlReport& report);
nlohmann::json proper_json(const SpaceOracle& codomain, const ProperReport& report);

}  // namespace coarse

#endif  // COARSE_IO_HPP
