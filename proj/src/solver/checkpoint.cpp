#include "landau/solver/checkpoint.hpp"

#include <filesystem>
#include <fstream>
#include <cstring>
#include <iterator>

#include "landau/core/errors.hpp"

namespace landau {

namespace {

const char* repr_name(Repr r) {
  switch (r) {
    case Repr::physical:
      return "physical";
    case Repr::fourier_x:
      return "fourier_x";
    case Repr::fourier_xv:
      return "fourier_xv";
  }
  return "physical";
}

Repr repr_from_name(const std::string& s) {
  if (s == "physical") return Repr::physical;
  if (s == "fourier_x") return Repr::fourier_x;
  if (s == "fourier_xv") return Repr::fourier_xv;
  throw ConfigInvalid("checkpoint: unknown repr '" + s + "'");
}

}  // namespace

std::string write_checkpoint(const std::string& stem, const SimState& s) {
  const Eigen::ArrayXcd& d = s.f.data();
  const std::size_t bytes = static_cast<std::size_t>(d.size()) * sizeof(cplx);
  {
    std::ofstream out(stem + ".bin", std::ios::binary);
    out.write(reinterpret_cast<const char*>(d.data()), static_cast<std::streamsize>(bytes));
    if (!out) throw std::runtime_error("cannot write " + stem + ".bin");
  }
  nlohmann::json j;
  j["grid"] = to_json(s.f.grid());
  j["t"] = s.t;
  j["repr"] = repr_name(s.f.repr());
  j["sha256"] = sha256_hex(d.data(), bytes);
  j["data"] = std::filesystem::path(stem + ".bin").filename().string();
  const std::string sidecar = stem + ".json";
  std::ofstream out(sidecar);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("cannot write " + sidecar);
  return sidecar;
}

SimState read_checkpoint(const std::string& sidecar_path) {
  std::ifstream in(sidecar_path);
  if (!in) throw ConfigInvalid("cannot open checkpoint '" + sidecar_path + "'");
  nlohmann::json j;
  in >> j;
  const GridSpec g = grid_from_json(j.at("grid"));
  const auto bin = std::filesystem::path(sidecar_path).parent_path() / j.at("data").get<std::string>();
  std::ifstream data(bin, std::ios::binary);
  const std::string raw((std::istreambuf_iterator<char>(data)), std::istreambuf_iterator<char>());
  if (raw.size() != g.size() * sizeof(cplx)) throw ConfigInvalid("checkpoint: data size does not match the grid");
  if (sha256_hex(raw.data(), raw.size()) != j.at("sha256").get<std::string>())
    throw ConfigInvalid("checkpoint: sha256 mismatch");
  Eigen::ArrayXcd d(static_cast<Eigen::Index>(g.size()));
  std::memcpy(d.data(), raw.data(), raw.size());
  SimState s;
  s.t = j.at("t").get<double>();
  s.f = PhaseField::from_data(g, repr_from_name(j.at("repr").get<std::string>()), std::move(d));
  return s;
}

}  // namespace landau
