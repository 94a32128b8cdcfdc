#include "morphevo/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "morphevo/csv.hpp"
#include "morphevo/experiment.hpp"
#include "morphevo/geometry.hpp"

namespace fs = std::filesystem;

namespace morphevo {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 460.0;
constexpr double kMarginL = 64.0;
constexpr double kMarginR = 20.0;
constexpr double kMarginT = 34.0;
constexpr double kMarginB = 46.0;

const char* kAsexualColor = "#7b2d8b"; // purple
const char* kSexualColor = "#2d6cb5";  // blue

std::string fnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// minimal line-plot canvas with linear axes
class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void include_x(double x) {
        xmin_ = std::min(xmin_, x);
        xmax_ = std::max(xmax_, x);
    }
    void include_y(double y) {
        ymin_ = std::min(ymin_, y);
        ymax_ = std::max(ymax_, y);
    }

    double sx(double x) const {
        const double span = xmax_ > xmin_ ? xmax_ - xmin_ : 1.0;
        return kMarginL + (x - xmin_) / span * (kWidth - kMarginL - kMarginR);
    }
    double sy(double y) const {
        const double span = ymax_ > ymin_ ? ymax_ - ymin_ : 1.0;
        return kHeight - kMarginB - (y - ymin_) / span * (kHeight - kMarginT - kMarginB);
    }

    void band(const std::vector<double>& xs, const std::vector<double>& lo,
              const std::vector<double>& hi, const std::string& color) {
        if (xs.size() < 2) return;
        std::ostringstream pts;
        for (std::size_t i = 0; i < xs.size(); ++i)
            pts << fnum(sx(xs[i])) << ',' << fnum(sy(hi[i])) << ' ';
        for (std::size_t i = xs.size(); i-- > 0;)
            pts << fnum(sx(xs[i])) << ',' << fnum(sy(lo[i])) << ' ';
        body_ << "<polygon points=\"" << pts.str() << "\" fill=\"" << color
              << "\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
    }

    void line(const std::vector<double>& xs, const std::vector<double>& ys,
              const std::string& color, double width = 1.8) {
        if (xs.empty()) return;
        if (xs.size() == 1) {
            body_ << "<circle cx=\"" << fnum(sx(xs[0])) << "\" cy=\"" << fnum(sy(ys[0]))
                  << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            return;
        }
        body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
              << "\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i)
            body_ << fnum(sx(xs[i])) << ',' << fnum(sy(ys[i])) << ' ';
        body_ << "\"/>\n";
    }

    void marker(double x, double y, const std::string& color, double r = 3.0) {
        body_ << "<circle cx=\"" << fnum(sx(x)) << "\" cy=\"" << fnum(sy(y)) << "\" r=\"" << r
              << "\" fill=\"" << color << "\"/>\n";
    }

    void square(double x, double y, const std::string& color, double half = 4.0) {
        body_ << "<rect x=\"" << fnum(sx(x) - half) << "\" y=\"" << fnum(sy(y) - half)
              << "\" width=\"" << fnum(2 * half) << "\" height=\"" << fnum(2 * half)
              << "\" fill=\"" << color << "\"/>\n";
    }

    void circle_at(double x, double y, double r_px, const std::string& fill,
                   const std::string& stroke) {
        body_ << "<circle cx=\"" << fnum(sx(x)) << "\" cy=\"" << fnum(sy(y)) << "\" r=\""
              << fnum(r_px) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }

    void legend(const std::vector<std::pair<std::string, std::string>>& entries) {
        double y = kMarginT + 8.0;
        for (const auto& [label, color] : entries) {
            body_ << "<rect x=\"" << fnum(kWidth - kMarginR - 150) << "\" y=\"" << fnum(y - 8)
                  << "\" width=\"14\" height=\"4\" fill=\"" << color << "\"/>\n";
            body_ << "<text x=\"" << fnum(kWidth - kMarginR - 130) << "\" y=\"" << fnum(y)
                  << "\" font-size=\"12\">" << label << "</text>\n";
            y += 16.0;
        }
    }

    void raw(const std::string& svg) { body_ << svg; }

    void write(const fs::path& file) const {
        std::ofstream out(file);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
            << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
        out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
            << title_ << "</text>\n";

        // axes with 5 ticks each
        const double x0 = kMarginL, x1 = kWidth - kMarginR;
        const double y0 = kHeight - kMarginB, y1 = kMarginT;
        out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
            << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
            << "\" stroke=\"black\"/>\n";
        for (int i = 0; i <= 4; ++i) {
            const double fx = xmin_ + (xmax_ - xmin_) * i / 4.0;
            const double fy = ymin_ + (ymax_ - ymin_) * i / 4.0;
            out << "<text x=\"" << fnum(sx(fx)) << "\" y=\"" << fnum(y0 + 16)
                << "\" text-anchor=\"middle\" font-size=\"11\">" << fnum(fx) << "</text>\n";
            out << "<text x=\"" << fnum(x0 - 6) << "\" y=\"" << fnum(sy(fy) + 4)
                << "\" text-anchor=\"end\" font-size=\"11\">" << fnum(fy) << "</text>\n";
            out << "<line x1=\"" << fnum(sx(fx)) << "\" y1=\"" << y0 << "\" x2=\"" << fnum(sx(fx))
                << "\" y2=\"" << fnum(y0 + 4) << "\" stroke=\"black\"/>\n";
            out << "<line x1=\"" << fnum(x0 - 4) << "\" y1=\"" << fnum(sy(fy)) << "\" x2=\"" << x0
                << "\" y2=\"" << fnum(sy(fy)) << "\" stroke=\"black\"/>\n";
        }
        out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 10
            << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel_ << "</text>\n";
        out << "<text x=\"16\" y=\"" << (y0 + y1) / 2
            << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
            << (y0 + y1) / 2 << ")\">" << ylabel_ << "</text>\n";
        out << body_.str();
        out << "</svg>\n";
    }

private:
    std::string title_, xlabel_, ylabel_;
    double xmin_ = 1e300, xmax_ = -1e300, ymin_ = 1e300, ymax_ = -1e300;
    std::ostringstream body_;
};

std::vector<double> numeric_column(const CsvTable& t, const std::string& name) {
    const int c = t.column(name);
    std::vector<double> out;
    if (c < 0) return out;
    out.reserve(t.rows.size());
    for (const auto& row : t.rows) out.push_back(std::stod(row[static_cast<std::size_t>(c)]));
    return out;
}

std::optional<std::vector<Vec2>> targets_from_config(const fs::path& dir) {
    const fs::path cfg = dir / "run_config.json";
    if (!fs::exists(cfg)) return std::nullopt;
    std::ifstream in(cfg);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("point_nav")) return std::nullopt;
    if (j.value("task", "") != "point_nav") return std::vector<Vec2>{};
    std::vector<Vec2> targets;
    for (const auto& t : j["point_nav"]["targets"])
        targets.push_back({t[0].get<double>(), t[1].get<double>()});
    return targets;
}

void draw_trajectory(SvgPlot& plot, const CsvTable& traj, const std::string& color) {
    auto xs = numeric_column(traj, "x");
    auto ys = numeric_column(traj, "y");
    plot.line(xs, ys, color, 1.2);
    if (!xs.empty()) plot.square(xs.back(), ys.back(), color, 3.0);
}

void prime_trajectory_bounds(SvgPlot& plot, const CsvTable& traj) {
    for (double x : numeric_column(traj, "x")) plot.include_x(x);
    for (double y : numeric_column(traj, "y")) plot.include_y(y);
}

void finish_trajectory_plot(SvgPlot& plot, const std::optional<std::vector<Vec2>>& targets,
                            const fs::path& file) {
    // start marker and target circles
    plot.include_x(0.0);
    plot.include_y(0.0);
    if (targets)
        for (const auto& t : *targets) {
            plot.include_x(t.x);
            plot.include_y(t.y);
        }
    // pad so markers at the rim stay visible
    plot.include_x(0.5);
    plot.include_x(-0.5);
    plot.include_y(0.5);
    plot.include_y(-0.5);
    if (targets)
        for (const auto& t : *targets) plot.circle_at(t.x, t.y, 7.0, "#f2c433", "#b08c00");
    plot.square(0.0, 0.0, "#7b2d8b", 5.0);
    plot.write(file);
}

const char* kind_fill(const std::string& kind) {
    if (kind == "core") return "#f2a33c";
    if (kind == "brick") return "#9aa0a6";
    return "#4a7db5"; // active hinge
}

} // namespace

void plot_run(const fs::path& run_dir) {
    // fitness curves
    if (fs::exists(run_dir / "generations.csv")) {
        CsvTable t = read_csv_file((run_dir / "generations.csv").string(),
                                   "morphevo/generations/v1");
        auto gens = numeric_column(t, "generation");
        auto best = numeric_column(t, "best_fitness");
        auto mean = numeric_column(t, "mean_fitness");
        SvgPlot plot("Fitness over generations", "generation", "fitness");
        for (double g : gens) plot.include_x(g);
        for (double v : best) plot.include_y(v);
        for (double v : mean) plot.include_y(v);
        plot.line(gens, best, "#b03030");
        plot.line(gens, mean, "#3060b0");
        plot.legend({{"best", "#b03030"}, {"mean", "#3060b0"}});
        plot.write(run_dir / "fitness.svg");
    }

    // best robot trajectory
    if (fs::exists(run_dir / "best_trajectory.csv")) {
        std::ifstream in(run_dir / "best_trajectory.csv");
        CsvTable traj = read_csv(in, "morphevo/trajectory/v1");
        SvgPlot plot("Best robot trajectory", "x [m]", "y [m]");
        prime_trajectory_bounds(plot, traj);
        auto targets = targets_from_config(run_dir);
        draw_trajectory(plot, traj, "#2d6cb5");
        finish_trajectory_plot(plot, targets, run_dir / "trajectory.svg");
    }

    // morphology schematic on the 2D grid
    if (fs::exists(run_dir / "best_body.json")) {
        std::ifstream in(run_dir / "best_body.json");
        nlohmann::json j = nlohmann::json::parse(in);
        SvgPlot plot("Best robot body (grid projection)", "x", "y");
        for (int v : {-3, 3}) {
            plot.include_x(v);
            plot.include_y(v);
        }
        std::ostringstream cells;
        for (const auto& m : j.at("modules")) {
            const int x = m.at("position")[0].get<int>();
            const int y = m.at("position")[1].get<int>();
            const int z = m.at("position")[2].get<int>();
            plot.include_x(x);
            plot.include_y(y);
            const double cx = plot.sx(x), cy = plot.sy(y);
            cells << "<rect x=\"" << fnum(cx - 12) << "\" y=\"" << fnum(cy - 12)
                  << "\" width=\"24\" height=\"24\" fill=\""
                  << kind_fill(m.at("kind").get<std::string>())
                  << "\" stroke=\"#333\" rx=\"3\"/>\n";
            if (z != 0)
                cells << "<text x=\"" << fnum(cx) << "\" y=\"" << fnum(cy + 4)
                      << "\" text-anchor=\"middle\" font-size=\"10\">z" << z << "</text>\n";
            if (m.at("rotation").get<int>() == 90)
                cells << "<circle cx=\"" << fnum(cx + 8) << "\" cy=\"" << fnum(cy - 8)
                      << "\" r=\"2\" fill=\"#222\"/>\n";
        }
        plot.raw(cells.str());
        plot.write(run_dir / "body.svg");
    }
}

namespace {

std::vector<fs::path> rep_dirs(const fs::path& cell_dir) {
    std::vector<fs::path> reps;
    for (const auto& entry : fs::directory_iterator(cell_dir))
        if (entry.is_directory() && entry.path().filename().string().rfind("rep_", 0) == 0)
            reps.push_back(entry.path());
    std::sort(reps.begin(), reps.end());
    return reps;
}

bool is_cell_dir(const fs::path& dir) {
    return fs::is_directory(dir) && !rep_dirs(dir).empty();
}

struct AggregateCurve {
    std::vector<double> gens, mean, lo, hi;
};

std::optional<AggregateCurve> read_aggregate(const fs::path& cell_dir) {
    const fs::path file = cell_dir / "aggregate.csv";
    if (!fs::exists(file)) return std::nullopt;
    CsvTable t = read_csv_file(file.string(), "morphevo/aggregate/v1");
    AggregateCurve c;
    c.gens = numeric_column(t, "generation");
    c.mean = numeric_column(t, "mean_of_mean");
    auto se = numeric_column(t, "se_mean");
    for (std::size_t i = 0; i < c.mean.size(); ++i) {
        c.lo.push_back(c.mean[i] - 1.96 * se[i]);
        c.hi.push_back(c.mean[i] + 1.96 * se[i]);
    }
    return c;
}

void draw_aggregate(SvgPlot& plot, const AggregateCurve& c, const std::string& color) {
    plot.band(c.gens, c.lo, c.hi, color);
    plot.line(c.gens, c.mean, color);
}

void prime_aggregate(SvgPlot& plot, const AggregateCurve& c) {
    for (double g : c.gens) plot.include_x(g);
    for (double v : c.lo) plot.include_y(v);
    for (double v : c.hi) plot.include_y(v);
}

// simple box stats: quartiles by linear interpolation, whiskers at min/max
struct BoxStats {
    double lo, q1, med, q3, hi, mean;
};

std::optional<BoxStats> box_stats(std::vector<double> v) {
    if (v.empty()) return std::nullopt;
    std::sort(v.begin(), v.end());
    auto quantile = [&](double q) {
        const double pos = q * (static_cast<double>(v.size()) - 1);
        const std::size_t i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        return i + 1 < v.size() ? v[i] * (1 - frac) + v[i + 1] * frac : v[i];
    };
    double sum = 0;
    for (double x : v) sum += x;
    return BoxStats{v.front(), quantile(0.25), quantile(0.5), quantile(0.75), v.back(),
                    sum / static_cast<double>(v.size())};
}

std::vector<double> final_best_per_rep(const fs::path& cell_dir) {
    std::vector<double> vals;
    for (const auto& rep : rep_dirs(cell_dir)) {
        const fs::path file = rep / "generations.csv";
        if (!fs::exists(file)) continue;
        CsvTable t = read_csv_file(file.string(), "morphevo/generations/v1");
        if (t.rows.empty()) continue;
        vals.push_back(
            std::stod(t.rows.back()[static_cast<std::size_t>(t.column("best_fitness"))]));
    }
    return vals;
}

} // namespace

void plot_cell(const fs::path& cell_dir) {
    const std::string name = cell_dir.filename().string();

    if (auto agg = read_aggregate(cell_dir)) {
        SvgPlot plot("Mean fitness, " + name + " (95% CI)", "generation", "fitness");
        prime_aggregate(plot, *agg);
        const bool sexual = name.find("_sexual_") != std::string::npos;
        draw_aggregate(plot, *agg, sexual ? kSexualColor : kAsexualColor);
        plot.write(cell_dir / "fitness_mean.svg");
    }

    // final-generation fitness box
    if (auto stats = box_stats(final_best_per_rep(cell_dir))) {
        SvgPlot plot("Final best fitness, " + name, "", "fitness");
        plot.include_x(-1.0);
        plot.include_x(1.0);
        for (double v : {stats->lo, stats->hi}) plot.include_y(v);
        plot.include_y(stats->lo - 0.05 * std::abs(stats->lo) - 1e-6);
        plot.include_y(stats->hi + 0.05 * std::abs(stats->hi) + 1e-6);
        std::ostringstream box;
        const double cx = plot.sx(0.0), half = 50.0;
        box << "<line x1=\"" << fnum(cx) << "\" y1=\"" << fnum(plot.sy(stats->lo)) << "\" x2=\""
            << fnum(cx) << "\" y2=\"" << fnum(plot.sy(stats->hi)) << "\" stroke=\"#333\"/>\n";
        box << "<rect x=\"" << fnum(cx - half) << "\" y=\"" << fnum(plot.sy(stats->q3))
            << "\" width=\"" << fnum(2 * half) << "\" height=\""
            << fnum(plot.sy(stats->q1) - plot.sy(stats->q3))
            << "\" fill=\"#cfe0f2\" stroke=\"#333\"/>\n";
        box << "<line x1=\"" << fnum(cx - half) << "\" y1=\"" << fnum(plot.sy(stats->med))
            << "\" x2=\"" << fnum(cx + half) << "\" y2=\"" << fnum(plot.sy(stats->med))
            << "\" stroke=\"#333\" stroke-width=\"2\"/>\n";
        plot.raw(box.str());
        plot.marker(0.0, stats->mean, "#c0392b", 4.0); // mean dot
        plot.write(cell_dir / "boxplot_final.svg");
    }

    // best trajectory of every repetition, overlaid
    {
        SvgPlot plot("Best trajectories, " + name, "x [m]", "y [m]");
        std::optional<std::vector<Vec2>> targets;
        bool any = false;
        std::vector<CsvTable> trajs;
        for (const auto& rep : rep_dirs(cell_dir)) {
            const fs::path file = rep / "best_trajectory.csv";
            if (!fs::exists(file)) continue;
            std::ifstream in(file);
            trajs.push_back(read_csv(in, "morphevo/trajectory/v1"));
            prime_trajectory_bounds(plot, trajs.back());
            if (!targets) targets = targets_from_config(rep);
            any = true;
        }
        if (any) {
            // asexual paths in blue, sexual in green
            const bool sexual = name.find("_sexual_") != std::string::npos;
            for (const auto& t : trajs)
                draw_trajectory(plot, t, sexual ? "#2e8b57" : "#2d6cb5");
            finish_trajectory_plot(plot, targets, cell_dir / "trajectories.svg");
        }
    }
}

void plot_grid(const fs::path& grid_dir) {
    // collect cells by (task, inheritance) and overlay the two brain modes
    std::map<std::string, std::map<std::string, fs::path>> groups;
    for (const auto& entry : fs::directory_iterator(grid_dir)) {
        if (!is_cell_dir(entry.path())) continue;
        const std::string name = entry.path().filename().string();
        for (const char* mode : {"asexual", "sexual"}) {
            const std::string key = std::string("_") + mode + "_";
            const auto pos = name.find(key);
            if (pos == std::string::npos) continue;
            const std::string task = name.substr(0, pos);
            const std::string inheritance = name.substr(pos + key.size());
            groups[task + "_" + inheritance][mode] = entry.path();
        }
    }

    for (const auto& [group, cells] : groups) {
        SvgPlot plot("Mean fitness, " + group + " (95% CI)", "generation", "fitness");
        std::vector<std::pair<std::string, std::string>> legend;
        std::vector<std::pair<AggregateCurve, std::string>> curves;
        for (const auto& [mode, dir] : cells) {
            if (auto agg = read_aggregate(dir)) {
                const std::string color = mode == "sexual" ? kSexualColor : kAsexualColor;
                prime_aggregate(plot, *agg);
                curves.emplace_back(*agg, color);
                legend.emplace_back(mode, color);
            }
        }
        if (curves.empty()) continue;
        for (const auto& [curve, color] : curves) draw_aggregate(plot, curve, color);
        plot.legend(legend);
        plot.write(grid_dir / ("compare_" + group + ".svg"));
    }
}

void plot_tree(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir.string());

    bool any = false;
    if (fs::exists(dir / "runlog.csv")) {
        plot_run(dir);
        return;
    }
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().filename() == "runlog.csv") {
            plot_run(entry.path().parent_path());
            any = true;
        }
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (is_cell_dir(entry.path())) {
            aggregate_cell(entry.path());
            plot_cell(entry.path());
            any = true;
        }
    }
    if (is_cell_dir(dir)) {
        aggregate_cell(dir);
        plot_cell(dir);
        any = true;
    } else {
        plot_grid(dir);
    }
    if (!any) throw std::invalid_argument("no run artifacts found under " + dir.string());
}

} // namespace morphevo
