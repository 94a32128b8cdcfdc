#pragma once

#include <vector>

#include "morphevo/sim.hpp"

namespace morphevo {

struct PointNavTask {
    std::vector<Vec2> targets = {{1.0, -1.0}, {0.0, -2.0}};
    double reach_radius = 0.01;
    double omega = 0.1;       // path length penalty weight
    double duration = 40.0;   // seconds
    double steering_gain = 1.0;
};

struct RotationTask {
    double duration = 30.0; // seconds; counter-clockwise counts positive
};

// Scale for one joint while homing on the next unreached target: the
// bearing beta is the signed angle from the heading to the target; a
// target to the right (beta < 0) slows joints with grid_x > 0 by
// max(0, 1 - |beta|/pi * gain), mirrored for targets to the left.
double steering_scale(const Pose& pose, const Vec2& next_target, int joint_grid_x,
                      double gain = 1.0);

// Stateful hook advancing through the target list as the robot reaches
// each one (checked every control tick).
class PointNavSteering : public SteeringHook {
public:
    explicit PointNavSteering(PointNavTask task);
    void observe(const Pose& pose) override;
    double joint_scale(const Pose& pose, int joint_grid_x) const override;
    std::size_t targets_reached() const { return next_; }

private:
    PointNavTask task_;
    std::size_t next_ = 0;
};

// Targets count in order when a 5 Hz sample comes within the reach radius;
// fitness is the summed distance of reached legs, plus progress towards
// the first unreached target, minus omega times the sampled path length.
double fitness_point_navigation(const Trajectory& traj, const PointNavTask& task);

// Sum of signed yaw deltas between consecutive sample orientations;
// accumulates across full revolutions. Throws on non-unit quaternions.
double fitness_rotation(const Trajectory& traj);

enum class TaskKind { PointNavigation, Rotation };

struct TaskSpec {
    TaskKind kind = TaskKind::PointNavigation;
    PointNavTask point_nav;
    RotationTask rotation;

    double duration() const {
        return kind == TaskKind::PointNavigation ? point_nav.duration : rotation.duration;
    }
};

// Builds the controller for the body from the genotype, simulates the task
// (with steering for point navigation) and scores the trajectory. Used
// both as the learning assessment and the evolutionary evaluation.
double evaluate_on_task(const Body& body, const BrainGenotype& genotype, const TaskSpec& task,
                        const SurrogateParams& sim_params = {}, double euler_dt = 0.001);

Trajectory simulate_task(const Body& body, const BrainGenotype& genotype, const TaskSpec& task,
                         const SurrogateParams& sim_params = {}, double euler_dt = 0.001);

} // namespace morphevo
