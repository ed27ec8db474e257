#include "sllg/trajectory.hpp"

#include "sllg/errors.hpp"

namespace sllg {

int TrajectoryRecord::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return int(i);
    throw BadParamsError("no such column: " + name);
}

double TrajectoryRecord::at(std::size_t row, const std::string& name) const {
    return data[row * columns.size() + column_index(name)];
}

std::vector<double> TrajectoryRecord::series(const std::string& name) const {
    const int c = column_index(name);
    std::vector<double> out(rows());
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = data[r * columns.size() + c];
    return out;
}

}  // namespace sllg
