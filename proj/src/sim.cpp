#include "morphevo/sim.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "morphevo/csv.hpp"

namespace morphevo {

CpgStepper::CpgStepper(CpgNetwork network, double euler_dt)
    : network_(std::move(network)), euler_dt_(euler_dt) {
    if (!(euler_dt > 0.0) || euler_dt > 0.01)
        throw std::invalid_argument("euler step must be in (0, 0.01]");
}

std::vector<double> CpgStepper::step(double control_dt) {
    int substeps = static_cast<int>(std::round(control_dt / euler_dt_));
    if (substeps < 1) substeps = 1;
    std::vector<double> out = network_.outputs();
    for (int s = 0; s < substeps; ++s) out = network_.step(euler_dt_);
    return out;
}

std::vector<double> CpgStepper::outputs() const { return network_.outputs(); }

Pose surrogate_step(const Pose& pose, const std::vector<JointRecord>& joints, double dt,
                    const SurrogateParams& params) {
    double actuation = 0.0;
    double asymmetry = 0.0;
    for (const auto& j : joints) {
        actuation += std::abs(j.delta_out);
        if (j.grid_x > 0)
            asymmetry += j.delta_out * j.delta_out;
        else if (j.grid_x < 0)
            asymmetry -= j.delta_out * j.delta_out;
    }

    // thrust along the pre-step heading, then the yaw update
    Pose next = pose;
    const double thrust = params.thrust_coeff * actuation;
    next.position = pose.position + pose.heading() * thrust;
    next.yaw = wrap_angle(pose.yaw + params.turn_coeff * asymmetry * dt);
    return next;
}

SurrogateSimulator::SurrogateSimulator(SurrogateParams params) : params_(params) {
    if (!(params_.control_dt > 0.0)) throw std::invalid_argument("control_dt must be positive");
    if (!(params_.sample_rate_hz > 0.0))
        throw std::invalid_argument("sample rate must be positive");
}

Trajectory SurrogateSimulator::simulate(const Body& body, ControllerStepper& controller,
                                        SteeringHook& steering, double duration) const {
    if (!(duration > 0.0)) throw std::invalid_argument("duration must be positive");

    const auto sites = joint_grid_2d(body);
    const int total_ticks = static_cast<int>(std::round(duration / params_.control_dt));
    const int ticks_per_sample =
        static_cast<int>(std::round(1.0 / (params_.sample_rate_hz * params_.control_dt)));
    if (ticks_per_sample < 1)
        throw std::invalid_argument("sample rate faster than the control rate");

    Trajectory traj;
    traj.sample_rate_hz = params_.sample_rate_hz;
    traj.duration = duration;

    Pose pose;
    auto record = [&](double t) {
        traj.samples.push_back({t, pose.position, pose.yaw, pose.orientation()});
    };
    record(0.0);

    std::vector<double> prev = controller.outputs();
    std::vector<JointRecord> records(sites.size());

    for (int tick = 1; tick <= total_ticks; ++tick) {
        steering.observe(pose);
        std::vector<double> out = controller.step(params_.control_dt);
        if (out.size() != sites.size())
            throw std::runtime_error("controller output count does not match joint count");

        for (std::size_t i = 0; i < sites.size(); ++i) {
            const double scale = steering.joint_scale(pose, sites[i].x);
            records[i] = {sites[i].x, scale * (out[i] - prev[i])};
        }
        pose = surrogate_step(pose, records, params_.control_dt, params_);
        if (!std::isfinite(pose.position.x) || !std::isfinite(pose.position.y) ||
            !std::isfinite(pose.yaw))
            throw std::runtime_error("simulation diverged at tick " + std::to_string(tick));

        prev = std::move(out);
        if (tick % ticks_per_sample == 0) record(tick * params_.control_dt);
    }
    return traj;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
    out << "# schema: morphevo/trajectory/v1\n";
    out << "t,x,y,yaw,qw,qx,qy,qz\n";
    for (const auto& s : traj.samples) {
        write_csv_row(out, {format_double(s.t), format_double(s.position.x),
                            format_double(s.position.y), format_double(s.yaw),
                            format_double(s.orientation.w), format_double(s.orientation.x),
                            format_double(s.orientation.y), format_double(s.orientation.z)});
    }
}

Trajectory read_trajectory_csv(std::istream& in) {
    CsvTable table = read_csv(in, "morphevo/trajectory/v1");
    Trajectory traj;
    for (const auto& row : table.rows) {
        TrajectorySample s;
        s.t = std::stod(row[0]);
        s.position = {std::stod(row[1]), std::stod(row[2])};
        s.yaw = std::stod(row[3]);
        s.orientation = {std::stod(row[4]), std::stod(row[5]), std::stod(row[6]),
                         std::stod(row[7])};
        traj.samples.push_back(s);
    }
    if (traj.samples.size() >= 2) {
        traj.duration = traj.samples.back().t;
        double dt = traj.samples[1].t - traj.samples[0].t;
        if (dt > 0) traj.sample_rate_hz = 1.0 / dt;
    }
    return traj;
}

} // namespace morphevo
