#include "morphevo/morphology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace morphevo {

namespace {

// rotation taking local +y (front) onto the socket direction
GridFrame socket_rotation(Socket s) {
    switch (s) {
    case Socket::Front: return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case Socket::Back: return {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
    case Socket::Left: return {{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}};
    case Socket::Right: return {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
    }
    return {};
}

// 90 degrees about the attachment axis (local +y), tipping the child's
// lateral sockets out of the parent's plane
constexpr GridFrame kSpin90{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}};

GridVec socket_direction(const GridFrame& frame, Socket s) {
    switch (s) {
    case Socket::Front: return frame.apply({0, 1, 0});
    case Socket::Back: return frame.apply({0, -1, 0});
    case Socket::Left: return frame.apply({-1, 0, 0});
    case Socket::Right: return frame.apply({1, 0, 0});
    }
    return {};
}

GridFrame child_frame(const GridFrame& parent, Socket socket, int rotation_deg) {
    GridFrame f = parent.compose(socket_rotation(socket));
    if (rotation_deg == 90) f = f.compose(kSpin90);
    return f;
}

bool in_bounds(const GridVec& p) {
    return std::abs(p.x) <= kGridBound && std::abs(p.y) <= kGridBound &&
           std::abs(p.z) <= kGridBound;
}

struct GridLess {
    bool operator()(const GridVec& a, const GridVec& b) const {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    }
};

} // namespace

std::vector<Socket> sockets_for(ModuleKind kind) {
    switch (kind) {
    case ModuleKind::Core:
        return {Socket::Front, Socket::Back, Socket::Left, Socket::Right};
    case ModuleKind::Brick:
        return {Socket::Front, Socket::Left, Socket::Right};
    case ModuleKind::ActiveHinge:
        return {Socket::Front};
    }
    return {};
}

Body Body::core_only() {
    Body b;
    b.modules_.push_back(BodyModule{});
    return b;
}

int Body::attach(int parent, Socket socket, ModuleKind kind, int rotation_deg) {
    if (parent < 0 || parent >= module_count())
        throw std::invalid_argument("attach: parent index out of range");
    if (kind == ModuleKind::Core) throw std::invalid_argument("attach: only one core allowed");
    if (rotation_deg != 0 && rotation_deg != 90)
        throw std::invalid_argument("attach: rotation must be 0 or 90");
    if (module_count() >= kMaxModules)
        throw std::invalid_argument("attach: module cap reached");

    const BodyModule& p = modules_[static_cast<std::size_t>(parent)];
    auto offered = sockets_for(p.kind);
    if (std::find(offered.begin(), offered.end(), socket) == offered.end())
        throw std::invalid_argument("attach: socket not offered by parent kind");
    for (int child : p.children)
        if (modules_[static_cast<std::size_t>(child)].parent_socket == socket)
            throw std::invalid_argument("attach: socket already used");

    GridVec pos = p.grid_pos + socket_direction(p.frame, socket);
    if (!in_bounds(pos)) throw std::invalid_argument("attach: position out of grid bounds");
    for (const auto& m : modules_)
        if (m.grid_pos == pos) throw std::invalid_argument("attach: cell already occupied");
    // hinges on the 2D center column have no brain-genotype row
    if (kind == ModuleKind::ActiveHinge && pos.x == 0 && pos.y == 0)
        throw std::invalid_argument("attach: a hinge cannot occupy the 2D center column");

    BodyModule child;
    child.kind = kind;
    child.rotation_deg = rotation_deg;
    child.grid_pos = pos;
    child.frame = child_frame(p.frame, socket, rotation_deg);
    child.parent = parent;
    child.parent_socket = socket;
    child.depth = p.depth + 1;
    modules_.push_back(child);
    int index = module_count() - 1;
    modules_[static_cast<std::size_t>(parent)].children.push_back(index);
    return index;
}

const BodyModule& Body::module(int index) const {
    if (index < 0 || index >= module_count())
        throw std::invalid_argument("module index out of range");
    return modules_[static_cast<std::size_t>(index)];
}

int Body::joint_count() const {
    return static_cast<int>(std::count_if(modules_.begin(), modules_.end(), [](const BodyModule& m) {
        return m.kind == ModuleKind::ActiveHinge;
    }));
}

bool Body::operator==(const Body& o) const {
    if (modules_.size() != o.modules_.size()) return false;
    for (std::size_t i = 0; i < modules_.size(); ++i) {
        const auto& a = modules_[i];
        const auto& b = o.modules_[i];
        if (a.kind != b.kind || a.rotation_deg != b.rotation_deg ||
            !(a.grid_pos == b.grid_pos) || a.parent != b.parent ||
            a.parent_socket != b.parent_socket)
            return false;
    }
    return true;
}

Body decode_body(const CppnGenome& genome) {
    return decode_body_with(
        [&genome](const std::array<double, kCppnInputs>& q) { return evaluate_cppn(genome, q); });
}

Body decode_body_with(const CppnQueryFn& eval) {
    Body body = Body::core_only();
    std::map<GridVec, int, GridLess> occupied;
    occupied.emplace(GridVec{0, 0, 0}, 0);

    struct OpenSocket {
        int module_index;
        Socket socket;
    };
    std::deque<OpenSocket> frontier;
    for (Socket s : sockets_for(ModuleKind::Core)) frontier.push_back({0, s});

    while (!frontier.empty() && body.module_count() < kMaxModules) {
        OpenSocket open = frontier.front();
        frontier.pop_front();

        const BodyModule& parent = body.module(open.module_index);
        GridVec pos = parent.grid_pos + socket_direction(parent.frame, open.socket);

        auto scores = eval({static_cast<double>(pos.x), static_cast<double>(pos.y),
                            static_cast<double>(pos.z), static_cast<double>(parent.depth + 1)});

        // outputs 0..2 score brick / joint / empty; lowest index wins ties
        int type = 0;
        for (int i = 1; i < 3; ++i)
            if (scores[static_cast<std::size_t>(i)] > scores[static_cast<std::size_t>(type)])
                type = i;
        if (type == 2) continue; // empty ends the branch

        ModuleKind kind = (type == 0) ? ModuleKind::Brick : ModuleKind::ActiveHinge;
        int rotation = (scores[4] > scores[3]) ? 90 : 0;

        if (!in_bounds(pos)) continue;
        if (occupied.count(pos)) continue; // cell taken, branch ends
        // a hinge on the 2D center column has no brain-genotype row; treat
        // the cell as unavailable so the branch ends here
        if (kind == ModuleKind::ActiveHinge && pos.x == 0 && pos.y == 0) continue;

        int index = body.attach(open.module_index, open.socket, kind, rotation);
        occupied.emplace(pos, index);
        for (Socket s : sockets_for(kind)) frontier.push_back({index, s});
    }
    return body;
}

std::vector<JointSite> joint_grid_2d(const Body& body) {
    std::vector<JointSite> sites;
    for (int i = 0; i < body.module_count(); ++i) {
        const BodyModule& m = body.module(i);
        if (m.kind != ModuleKind::ActiveHinge) continue;
        sites.push_back({i, m.grid_pos.x, m.grid_pos.y, false});
    }
    for (auto& a : sites)
        for (const auto& b : sites)
            if (a.module_index != b.module_index && a.x == b.x && a.y == b.y) a.stacked = true;
    return sites;
}

int tree_distance(const Body& body, int module_a, int module_b) {
    if (module_a < 0 || module_a >= body.module_count() || module_b < 0 ||
        module_b >= body.module_count())
        throw std::invalid_argument("tree_distance: module not in body");

    int a = module_a, b = module_b, dist = 0;
    while (a != b) {
        const auto& ma = body.module(a);
        const auto& mb = body.module(b);
        if (ma.depth >= mb.depth) {
            a = ma.parent;
            ++dist;
        } else {
            b = mb.parent;
            ++dist;
        }
    }
    return dist;
}

namespace {

const char* kind_name(ModuleKind k) {
    switch (k) {
    case ModuleKind::Core: return "core";
    case ModuleKind::Brick: return "brick";
    case ModuleKind::ActiveHinge: return "active_hinge";
    }
    return "core";
}

ModuleKind kind_from_name(const std::string& s) {
    if (s == "core") return ModuleKind::Core;
    if (s == "brick") return ModuleKind::Brick;
    if (s == "active_hinge") return ModuleKind::ActiveHinge;
    throw std::invalid_argument("unknown module kind: " + s);
}

const char* socket_name(Socket s) {
    switch (s) {
    case Socket::Front: return "front";
    case Socket::Back: return "back";
    case Socket::Left: return "left";
    case Socket::Right: return "right";
    }
    return "front";
}

Socket socket_from_name(const std::string& s) {
    if (s == "front") return Socket::Front;
    if (s == "back") return Socket::Back;
    if (s == "left") return Socket::Left;
    if (s == "right") return Socket::Right;
    throw std::invalid_argument("unknown socket: " + s);
}

} // namespace

std::string body_to_json(const Body& body) {
    nlohmann::json j;
    j["schema"] = "morphevo/body/v1";
    j["modules"] = nlohmann::json::array();
    for (const auto& m : body.modules()) {
        nlohmann::json jm;
        jm["kind"] = kind_name(m.kind);
        jm["rotation"] = m.rotation_deg;
        jm["position"] = {m.grid_pos.x, m.grid_pos.y, m.grid_pos.z};
        jm["parent"] = m.parent;
        jm["socket"] = socket_name(m.parent_socket);
        j["modules"].push_back(jm);
    }
    return j.dump(2);
}

Body body_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("schema", "") != "morphevo/body/v1")
        throw std::invalid_argument("unexpected body schema");
    const auto& jmodules = j.at("modules");
    if (jmodules.empty()) throw std::invalid_argument("body must contain a core");

    Body body = Body::core_only();
    for (std::size_t i = 1; i < jmodules.size(); ++i) {
        const auto& jm = jmodules[i];
        body.attach(jm.at("parent").get<int>(), socket_from_name(jm.at("socket")),
                    kind_from_name(jm.at("kind")), jm.at("rotation").get<int>());
    }
    return body;
}

} // namespace morphevo
