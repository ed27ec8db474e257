#ifndef SLLG_IO_HPP
#define SLLG_IO_HPP

#include <string>
#include <vector>

#include "sllg/field.hpp"
#include "sllg/trajectory.hpp"

namespace sllg {

// Binary snapshot: magic "SLLG", u32 version, u32 n, u32 component count,
// then each component as little-endian f64, row-major.
void write_fields_bin(const std::string& path, const std::vector<const ScalarField*>& fields);
void write_field_bin(const std::string& path, const ScalarField& f);
void write_field_bin(const std::string& path, const VectorField3& u);
std::vector<ScalarField> read_fields_bin(const std::string& path);

std::string field_to_csv(const ScalarField& f);
void write_field_csv(const std::string& path, const ScalarField& f);

std::string format_g17(double x);
void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

// long format: traj_id,t,quantity,value for every recorded column
void append_record_csv(std::string& out, const TrajectoryRecord& rec, int traj_id);

}  // namespace sllg

#endif
