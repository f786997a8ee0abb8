#include "nfcb/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nfcb {

namespace {

constexpr char kMagic[4] = {'N', 'F', 'C', 'B'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(static_cast<char>(v)); }
  void raw(const void* p, std::size_t n) {
    const char* c = static_cast<const char*>(p);
    bytes_.insert(bytes_.end(), c, c + n);
  }
  void i32(std::int32_t v) { raw(&v, sizeof v); }
  void u64(std::uint64_t v) { raw(&v, sizeof v); }
  void f64(double v) { raw(&v, sizeof v); }
  const std::string& bytes() const { return bytes_; }

 private:
  std::string bytes_;
};

class Reader {
 public:
  explicit Reader(std::string bytes) : bytes_(std::move(bytes)) {}
  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
  std::int32_t i32() {
    std::int32_t v;
    std::memcpy(&v, take(sizeof v), sizeof v);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v;
    std::memcpy(&v, take(sizeof v), sizeof v);
    return v;
  }
  double f64() {
    double v;
    std::memcpy(&v, take(sizeof v), sizeof v);
    return v;
  }

 private:
  const char* take(std::size_t n) {
    if (pos_ + n > bytes_.size())
      throw std::runtime_error("codebook file truncated");
    const char* p = bytes_.data() + pos_;
    pos_ += n;
    return p;
  }
  std::string bytes_;
  std::size_t pos_ = 0;
};

void put_config(Writer& w, const ArrayConfig& cfg) {
  w.i32(cfg.n_w);
  w.f64(cfg.f_c);
  w.f64(cfg.lambda);
  w.f64(cfg.d);
}

ArrayConfig get_config(Reader& r) {
  ArrayConfig cfg;
  cfg.n_w = r.i32();
  cfg.f_c = r.f64();
  cfg.lambda = r.f64();
  cfg.d = r.f64();
  return cfg;
}

void put_beam(Writer& w, const BeamVector& v) {
  w.i32(v.size());
  for (const auto& c : v.weights) {
    w.f64(c.real());
    w.f64(c.imag());
  }
  for (auto a : v.active) w.u8(a);
}

BeamVector get_beam(Reader& r) {
  BeamVector v;
  const int n = r.i32();
  v.weights.resize(n);
  v.active.resize(n);
  for (int i = 0; i < n; ++i) {
    const double re = r.f64();
    const double im = r.f64();
    v.weights[i] = {re, im};
  }
  for (int i = 0; i < n; ++i) v.active[i] = r.u8();
  return v;
}

void put_point(Writer& w, const PolarPoint& p) {
  w.f64(p.theta);
  w.f64(p.r);
  w.f64(p.kappa);
}

PolarPoint get_point(Reader& r) {
  PolarPoint p;
  p.theta = r.f64();
  p.r = r.f64();
  p.kappa = r.f64();
  return p;
}

void put_lower(Writer& w, const LowerCodebook& cb) {
  put_config(w, cb.cfg);
  w.f64(cb.params.rho);
  w.f64(cb.params.delta);
  w.i32(cb.params.n_theta);
  w.i32(cb.params.n_r);
  for (double t : cb.grid.thetas) w.f64(t);
  for (double k : cb.grid.ring_kappas) w.f64(k);
  for (const auto& p : cb.grid.points) put_point(w, p);
  for (const auto& v : cb.codewords) put_beam(w, v);
}

LowerCodebook get_lower(Reader& r) {
  LowerCodebook cb;
  cb.cfg = get_config(r);
  cb.params.rho = r.f64();
  cb.params.delta = r.f64();
  cb.params.n_theta = r.i32();
  cb.params.n_r = r.i32();
  cb.grid.thetas.resize(cb.params.n_theta);
  for (auto& t : cb.grid.thetas) t = r.f64();
  cb.grid.ring_kappas.resize(cb.params.n_r);
  for (auto& k : cb.grid.ring_kappas) k = r.f64();
  const int n = cb.params.n_theta * cb.params.n_r;
  cb.grid.points.reserve(n);
  for (int i = 0; i < n; ++i) cb.grid.points.push_back(get_point(r));
  cb.codewords.reserve(n);
  for (int i = 0; i < n; ++i) cb.codewords.push_back(get_beam(r));
  return cb;
}

void put_hier(Writer& w, const HierarchicalCodebook& hier) {
  put_config(w, hier.cfg);
  w.i32(hier.hcfg.n_lv);
  w.u8(static_cast<std::uint8_t>(hier.hcfg.pattern));
  w.f64(hier.hcfg.ring_gain_fraction);
  w.i32(static_cast<std::int32_t>(hier.levels.size()));
  for (const auto& level : hier.levels) {
    w.i32(level.n_theta);
    w.i32(static_cast<std::int32_t>(level.ring_kappas.size()));
    for (double k : level.ring_kappas) w.f64(k);
    for (const auto& cw : level.codewords) {
      put_beam(w, cw.w);
      w.f64(cw.region.theta_lo);
      w.f64(cw.region.theta_hi);
      w.f64(cw.region.kappa_lo);
      w.f64(cw.region.kappa_hi);
      put_point(w, cw.target);
    }
  }
  for (const auto& per_level : hier.children) {
    w.i32(static_cast<std::int32_t>(per_level.size()));
    for (const auto& kids : per_level) {
      w.i32(static_cast<std::int32_t>(kids.size()));
      for (int k : kids) w.i32(k);
    }
  }
  put_lower(w, hier.lower);
}

HierarchicalCodebook get_hier(Reader& r) {
  HierarchicalCodebook hier;
  hier.cfg = get_config(r);
  hier.hcfg.n_lv = r.i32();
  hier.hcfg.pattern = static_cast<PatternKind>(r.u8());
  hier.hcfg.ring_gain_fraction = r.f64();
  const int n_levels = r.i32();
  hier.levels.resize(n_levels);
  for (auto& level : hier.levels) {
    level.n_theta = r.i32();
    const int n_rings = r.i32();
    level.ring_kappas.resize(n_rings);
    for (auto& k : level.ring_kappas) k = r.f64();
    level.codewords.resize(static_cast<std::size_t>(n_rings) * level.n_theta);
    for (auto& cw : level.codewords) {
      cw.w = get_beam(r);
      cw.region.theta_lo = r.f64();
      cw.region.theta_hi = r.f64();
      cw.region.kappa_lo = r.f64();
      cw.region.kappa_hi = r.f64();
      cw.target = get_point(r);
    }
  }
  hier.children.resize(n_levels);
  for (auto& per_level : hier.children) {
    per_level.resize(r.i32());
    for (auto& kids : per_level) {
      kids.resize(r.i32());
      for (auto& k : kids) k = r.i32();
    }
  }
  hier.lower = get_lower(r);
  return hier;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

Reader open_reader(const std::string& path, std::uint8_t expected_kind) {
  Reader r(read_file(path));
  char magic[4];
  for (char& c : magic) c = static_cast<char>(r.u8());
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error(path + ": not a codebook file");
  if (r.i32() != static_cast<std::int32_t>(kVersion))
    throw std::runtime_error(path + ": unsupported codebook version");
  const std::uint8_t kind = r.u8();
  if (kind != expected_kind)
    throw std::runtime_error(path + ": unexpected codebook kind");
  return r;
}

std::string serialize_lower(const LowerCodebook& cb) {
  Writer w;
  w.raw(kMagic, 4);
  w.i32(kVersion);
  w.u8(0);
  put_lower(w, cb);
  return w.bytes();
}

std::string serialize_hier(const HierarchicalCodebook& hier) {
  Writer w;
  w.raw(kMagic, 4);
  w.i32(kVersion);
  w.u8(1);
  put_hier(w, hier);
  return w.bytes();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void csv_row(std::FILE* f, int level, int ring, int angle, const PolarPoint& p,
             const BeamVector& w) {
  std::fprintf(f, "%d,%d,%d,%.17g,%.17g", level, ring + 1, angle + 1, p.theta, p.r);
  for (const auto& c : w.weights)
    std::fprintf(f, ",%.17g,%.17g", c.real(), c.imag());
  std::fprintf(f, "\n");
}

}  // namespace

void save_codebook(const std::string& path, const LowerCodebook& cb) {
  write_file(path, serialize_lower(cb));
}

void save_codebook(const std::string& path, const HierarchicalCodebook& hier) {
  write_file(path, serialize_hier(hier));
}

LowerCodebook load_lower_codebook(const std::string& path) {
  Reader r = open_reader(path, 0);
  return get_lower(r);
}

HierarchicalCodebook load_hierarchical_codebook(const std::string& path) {
  Reader r = open_reader(path, 1);
  return get_hier(r);
}

bool codebook_file_is_hierarchical(const std::string& path) {
  Reader r(read_file(path));
  for (int i = 0; i < 4; ++i) r.u8();
  r.i32();
  return r.u8() == 1;
}

void export_codebook_csv(const std::string& path, const LowerCodebook& cb, int level) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  std::fprintf(f, "level,ring,angle,theta,r,weights_re_im\n");
  for (int ring = 0; ring < cb.params.n_r; ++ring)
    for (int angle = 0; angle < cb.params.n_theta; ++angle)
      csv_row(f, level, ring, angle, cb.point(ring, angle), cb.codeword(ring, angle));
  std::fclose(f);
}

void export_codebook_csv(const std::string& path, const HierarchicalCodebook& hier) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  std::fprintf(f, "level,ring,angle,theta,r,weights_re_im\n");
  for (std::size_t li = 0; li < hier.levels.size(); ++li) {
    const auto& level = hier.levels[li];
    const int n_rings = static_cast<int>(level.ring_kappas.size());
    for (int ring = 0; ring < n_rings; ++ring)
      for (int angle = 0; angle < level.n_theta; ++angle) {
        const auto& cw = level.codewords[level.index(ring, angle)];
        csv_row(f, static_cast<int>(li) + 1, ring, angle, cw.target, cw.w);
      }
  }
  const auto& cb = hier.lower;
  for (int ring = 0; ring < cb.params.n_r; ++ring)
    for (int angle = 0; angle < cb.params.n_theta; ++angle)
      csv_row(f, hier.hcfg.n_lv, ring, angle, cb.point(ring, angle),
              cb.codeword(ring, angle));
  std::fclose(f);
}

std::string codebook_hash(const LowerCodebook& cb) {
  return hex64(fnv1a(serialize_lower(cb)));
}

std::string codebook_hash(const HierarchicalCodebook& hier) {
  return hex64(fnv1a(serialize_hier(hier)));
}

}  // namespace nfcb
