#pragma once

#include <functional>
#include <string>
#include <vector>

#include "morphevo/cppn.hpp"

namespace morphevo {

enum class ModuleKind { Core, Brick, ActiveHinge };
enum class Socket { Front, Back, Left, Right };

inline constexpr int kMaxModules = 10;
inline constexpr int kGridBound = 10; // module coordinates stay in [-10, 10]

struct GridVec {
    int x = 0;
    int y = 0;
    int z = 0;

    GridVec operator+(const GridVec& o) const { return {x + o.x, y + o.y, z + o.z}; }
    bool operator==(const GridVec& o) const = default;
};

// Integer rotation frame: columns are the world images of the module's
// local x/y/z axes. A module's "front" is its local +y.
struct GridFrame {
    GridVec ax{1, 0, 0};
    GridVec ay{0, 1, 0};
    GridVec az{0, 0, 1};

    GridVec apply(const GridVec& v) const {
        return {ax.x * v.x + ay.x * v.y + az.x * v.z,
                ax.y * v.x + ay.y * v.y + az.y * v.z,
                ax.z * v.x + ay.z * v.y + az.z * v.z};
    }

    GridFrame compose(const GridFrame& r) const {
        return {apply(r.ax), apply(r.ay), apply(r.az)};
    }
};

struct BodyModule {
    ModuleKind kind = ModuleKind::Core;
    int rotation_deg = 0; // 0 or 90, about the attachment axis
    GridVec grid_pos;
    GridFrame frame;
    int parent = -1; // -1 only for the core
    Socket parent_socket = Socket::Front;
    int depth = 0; // tree distance to the core
    std::vector<int> children;
};

// Tree of modules; index 0 is always the core at the origin.
class Body {
public:
    static Body core_only();

    // Builder used by fixtures and tests; validates grid bounds, collisions
    // and the module cap. Returns the new module's index.
    int attach(int parent, Socket socket, ModuleKind kind, int rotation_deg);

    const std::vector<BodyModule>& modules() const { return modules_; }
    const BodyModule& module(int index) const;
    int module_count() const { return static_cast<int>(modules_.size()); }
    int joint_count() const;

    bool operator==(const Body& o) const;

private:
    Body() = default;
    std::vector<BodyModule> modules_;
};

// Sockets a module of the given kind offers, in exploration order.
std::vector<Socket> sockets_for(ModuleKind kind);

using CppnQueryFn =
    std::function<std::array<double, kCppnOutputs>(const std::array<double, kCppnInputs>&)>;

// Breadth-first growth from the core: each open socket queries the pattern
// network at the candidate cell, the winning type score decides the module
// (empty ends the branch), the winning rotation score picks 0 or 90
// degrees. Occupied cells end the branch, growth stops at ten modules.
Body decode_body(const CppnGenome& genome);
Body decode_body_with(const CppnQueryFn& eval);

struct JointSite {
    int module_index = 0;
    int x = 0; // 2D grid coordinates (z dropped)
    int y = 0;
    bool stacked = false; // another joint shares this 2D cell
};

// Per active hinge, its 2D grid cell in decode order.
std::vector<JointSite> joint_grid_2d(const Body& body);

// Edge count on the unique tree path between two modules. Throws
// std::invalid_argument if an index is out of range.
int tree_distance(const Body& body, int module_a, int module_b);

// Serialization, schema "morphevo/body/v1".
std::string body_to_json(const Body& body);
Body body_from_json(const std::string& text);

} // namespace morphevo
