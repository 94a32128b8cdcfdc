#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "morphevo/brain.hpp"
#include "morphevo/geometry.hpp"
#include "morphevo/morphology.hpp"

namespace morphevo {

struct Pose {
    Vec2 position;
    double yaw = 0.0; // radians, counter-clockwise positive

    Quat orientation() const { return Quat::from_yaw(yaw); }
    Vec2 heading() const { return {std::cos(yaw), std::sin(yaw)}; }
};

struct TrajectorySample {
    double t = 0.0;
    Vec2 position;
    double yaw = 0.0;
    Quat orientation;
};

struct Trajectory {
    std::vector<TrajectorySample> samples; // equally spaced, first at t = 0
    double sample_rate_hz = 5.0;
    double duration = 0.0;
};

struct SurrogateParams {
    double control_dt = 0.05;    // controller consultation period
    double sample_rate_hz = 5.0; // pose recording rate
    double thrust_coeff = 0.05;  // c_f, meters per unit of actuation change
    double turn_coeff = 0.5;     // c_t, rad/s per unit of left/right asymmetry
};

// Yields per-joint outputs once per control tick.
class ControllerStepper {
public:
    virtual ~ControllerStepper() = default;
    virtual std::vector<double> step(double control_dt) = 0;
    virtual std::vector<double> outputs() const = 0;
};

// Drives a CPG network with fixed-size Euler substeps per control tick.
class CpgStepper : public ControllerStepper {
public:
    explicit CpgStepper(CpgNetwork network, double euler_dt = 0.001);
    std::vector<double> step(double control_dt) override;
    std::vector<double> outputs() const override;

private:
    CpgNetwork network_;
    double euler_dt_;
};

// Closed-loop hook scaling joint actuation; the default is a no-op
// (open-loop tasks).
class SteeringHook {
public:
    virtual ~SteeringHook() = default;
    virtual void observe(const Pose&) {}
    virtual double joint_scale(const Pose&, int joint_grid_x) const { return 1.0; }
};

struct JointRecord {
    int grid_x = 0;      // 2D body-grid x coordinate; sign splits left/right
    double delta_out = 0.0; // actuation change since the previous tick
};

// Planar surrogate dynamics for one control tick: actuation change thrusts
// the robot along its heading, left/right actuation asymmetry turns it.
Pose surrogate_step(const Pose& pose, const std::vector<JointRecord>& joints, double dt,
                    const SurrogateParams& params = {});

// Backend interface; a higher-fidelity physics engine would implement this
// same contract.
class Simulator {
public:
    virtual ~Simulator() = default;
    virtual Trajectory simulate(const Body& body, ControllerStepper& controller,
                                SteeringHook& steering, double duration) const = 0;
};

class SurrogateSimulator : public Simulator {
public:
    explicit SurrogateSimulator(SurrogateParams params = {});

    // Deterministic: equal inputs give byte-identical trajectories. Throws
    // std::runtime_error naming the tick if the dynamics go non-finite.
    Trajectory simulate(const Body& body, ControllerStepper& controller, SteeringHook& steering,
                        double duration) const override;

    const SurrogateParams& params() const { return params_; }

private:
    SurrogateParams params_;
};

// CSV export, schema "morphevo/trajectory/v1", columns
// t,x,y,yaw,qw,qx,qy,qz.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
Trajectory read_trajectory_csv(std::istream& in);

} // namespace morphevo
