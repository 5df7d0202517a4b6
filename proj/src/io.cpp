#include "zeno/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zeno/error.hpp"

namespace zeno {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cli-io", "cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error("cli-io", "failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cli-io", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string analytic_csv(const std::vector<AnalyticRow>& rows) {
  std::string out = "t,p1,vqsl,discontinuity\n";
  for (const auto& row : rows) {
    out += format_double(row.t);
    out += ',';
    out += format_double(row.p1);
    out += ',';
    out += format_double(row.vqsl.value);
    out += ',';
    out += row.vqsl.discontinuity ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,p1,purity_Q\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out += format_double(traj.times[i]);
    out += ',';
    out += format_double(traj.p1[i]);
    out += ',';
    out += format_double(traj.purity[i]);
    out += '\n';
  }
  return out;
}

std::string qfi_csv(const QslCurve& curve) {
  std::string out = "t,qfi,vqsl,rank_truncated\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    out += format_double(curve.times[i]);
    out += ',';
    out += format_double(curve.qfi[i]);
    out += ',';
    out += format_double(curve.vqsl[i]);
    out += ',';
    out += curve.rank_truncated[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string tau_qsl_csv(const std::vector<int>& ns, const std::vector<TauQslValue>& values) {
  if (ns.size() != values.size()) throw Error("cli-io", "tau_qsl row length mismatch");
  std::string out = "n,tau_qsl,divergent\n";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    out += std::to_string(ns[i]);
    out += ',';
    out += format_double(values[i].value);
    out += ',';
    out += values[i].divergent ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "r,tau_min,residual,branch\n";
  for (const auto& row : rows) {
    out += format_double(row.r);
    out += ',';
    out += format_double(row.result.tau_min);
    out += ',';
    out += format_double(row.result.residual);
    out += ',';
    out += std::to_string(row.result.branch);
    out += '\n';
  }
  return out;
}

std::string grid_csv(const std::vector<FidelityCell>& cells) {
  std::string out = "r,tau,p1\n";
  for (const auto& cell : cells) {
    out += format_double(cell.r);
    out += ',';
    out += format_double(cell.tau);
    out += ',';
    out += format_double(cell.p1);
    out += '\n';
  }
  return out;
}

}  // namespace zeno
