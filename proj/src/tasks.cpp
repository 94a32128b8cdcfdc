#include "morphevo/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace morphevo {

double steering_scale(const Pose& pose, const Vec2& next_target, int joint_grid_x, double gain) {
    const Vec2 to_target = next_target - pose.position;
    if (to_target.norm() == 0.0) return 1.0;

    const double bearing = wrap_angle(std::atan2(to_target.y, to_target.x) - pose.yaw);
    const bool slow_right = bearing < 0.0 && joint_grid_x > 0;
    const bool slow_left = bearing > 0.0 && joint_grid_x < 0;
    if (!slow_right && !slow_left) return 1.0;

    const double scale = 1.0 - std::abs(bearing) / M_PI * gain;
    return std::clamp(scale, 0.0, 1.0);
}

PointNavSteering::PointNavSteering(PointNavTask task) : task_(std::move(task)) {}

void PointNavSteering::observe(const Pose& pose) {
    while (next_ < task_.targets.size() &&
           distance(pose.position, task_.targets[next_]) <= task_.reach_radius)
        ++next_;
}

double PointNavSteering::joint_scale(const Pose& pose, int joint_grid_x) const {
    if (next_ >= task_.targets.size()) return 1.0; // all targets reached
    return steering_scale(pose, task_.targets[next_], joint_grid_x, task_.steering_gain);
}

double fitness_point_navigation(const Trajectory& traj, const PointNavTask& task) {
    if (traj.samples.empty()) throw std::invalid_argument("empty trajectory");
    if (task.targets.empty()) throw std::invalid_argument("task needs at least one target");

    // targets must be hit in sequence
    std::size_t reached = 0;
    for (const auto& s : traj.samples) {
        while (reached < task.targets.size() &&
               distance(s.position, task.targets[reached]) <= task.reach_radius)
            ++reached;
    }

    double path_length = 0.0;
    for (std::size_t i = 1; i < traj.samples.size(); ++i)
        path_length += distance(traj.samples[i].position, traj.samples[i - 1].position);

    const Vec2 start{0.0, 0.0};
    auto target = [&](std::size_t i) { return i == 0 ? start : task.targets[i - 1]; };

    double legs = 0.0;
    for (std::size_t i = 1; i <= reached; ++i) legs += distance(target(i), target(i - 1));

    // credit motion towards the first unreached target, none once the list
    // is exhausted
    double progress = 0.0;
    if (reached < task.targets.size()) {
        const Vec2 final_pos = traj.samples.back().position;
        progress = distance(target(reached + 1), target(reached)) -
                   distance(final_pos, target(reached + 1));
    }

    return legs + progress - task.omega * path_length;
}

double fitness_rotation(const Trajectory& traj) {
    if (traj.samples.size() < 2)
        throw std::invalid_argument("rotation fitness needs at least two samples");

    constexpr double kNormTolerance = 1e-6;
    for (const auto& s : traj.samples)
        if (std::abs(s.orientation.norm() - 1.0) > kNormTolerance)
            throw std::invalid_argument("trajectory carries a non-unit quaternion");

    double total = 0.0;
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const Quat rel = traj.samples[i - 1].orientation.conjugate() * traj.samples[i].orientation;
        total += rel.yaw();
    }
    return total;
}

namespace {

class NoSteering : public SteeringHook {};

} // namespace

Trajectory simulate_task(const Body& body, const BrainGenotype& genotype, const TaskSpec& task,
                         const SurrogateParams& sim_params, double euler_dt) {
    CpgStepper stepper(build_cpg_network(body, genotype), euler_dt);
    SurrogateSimulator sim(sim_params);
    if (task.kind == TaskKind::PointNavigation) {
        PointNavSteering steering(task.point_nav);
        return sim.simulate(body, stepper, steering, task.point_nav.duration);
    }
    NoSteering steering;
    return sim.simulate(body, stepper, steering, task.rotation.duration);
}

double evaluate_on_task(const Body& body, const BrainGenotype& genotype, const TaskSpec& task,
                        const SurrogateParams& sim_params, double euler_dt) {
    Trajectory traj = simulate_task(body, genotype, task, sim_params, euler_dt);
    return task.kind == TaskKind::PointNavigation
               ? fitness_point_navigation(traj, task.point_nav)
               : fitness_rotation(traj);
}

} // namespace morphevo
