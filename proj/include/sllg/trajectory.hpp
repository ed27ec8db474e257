#ifndef SLLG_TRAJECTORY_HPP
#define SLLG_TRAJECTORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "sllg/field.hpp"
#include "sllg/rng.hpp"

namespace sllg {

struct FlowState {
    double t = 0.0;
    long step_count = 0;
    VectorField3 u;
    PhiloxRng rng;

    FlowState(VectorField3 u0, PhiloxRng rng0) : u(std::move(u0)), rng(rng0) {}
};

struct BlowupEvent {
    double time = 0.0;
    double center_x1 = 0.0, center_x2 = 0.0;
    double local_energy = 0.0;   // window energy at trigger
    double energy_pre = 0.0;     // global E just before restart
    double energy_post = 0.0;    // global E of the restart data
    double energy_drop = 0.0;
    bool quantum = false;        // drop >= eps1
    double eps1 = 0.0;
    int restart_cutoff = 0;
    int detection_stride = 1;
};

// Scalar time series of one trajectory: fixed columns, one row per sample,
// plus the blow-up event ledger.
struct TrajectoryRecord {
    std::vector<std::string> columns;
    std::vector<double> data;  // row-major
    std::vector<BlowupEvent> events;
    std::string stop_reason;  // empty when the run reached T
    double stop_time = -1.0;

    std::size_t rows() const { return columns.empty() ? 0 : data.size() / columns.size(); }
    int column_index(const std::string& name) const;
    double at(std::size_t row, const std::string& name) const;
    std::vector<double> series(const std::string& name) const;
    void push_row(const std::vector<double>& row) { data.insert(data.end(), row.begin(), row.end()); }
};

}  // namespace sllg

#endif
