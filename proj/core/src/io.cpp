#include "apergo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace apergo::io {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) out.push_back(field);
  return out;
}

double parse_number(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
      ++used;
    }
    require(used == token.size(), errc::invalid_input,
            context + ": trailing characters in number '" + token + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(errc::invalid_input, context + ": not a number: '" + token + "'");
  } catch (const std::out_of_range&) {
    fail(errc::invalid_input, context + ": number out of range: '" + token + "'");
  }
}

bool looks_numeric(const std::string& token) {
  char* end = nullptr;
  static_cast<void>(std::strtod(token.c_str(), &end));
  return end != token.c_str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file(path);
  require(file.good(), errc::invalid_input, "cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(file, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

json parse_json_file(const std::string& path) {
  std::ifstream file(path);
  require(file.good(), errc::invalid_input, "cannot open file: " + path);
  try {
    return json::parse(file);
  } catch (const json::parse_error& e) {
    fail(errc::invalid_input, path + ": JSON parse error: " + e.what());
  }
}

bool has_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).extension() == ext;
}

Matrix read_matrix_json(const std::string& path) {
  const json j = parse_json_file(path);
  require(j.is_object() && j.contains("rows") && j.contains("cols") &&
              j.contains("entries"),
          errc::invalid_input, path + ": matrix JSON needs rows/cols/entries");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  require(rows >= 1 && cols >= 1, errc::invalid_input,
          path + ": matrix dimensions must be positive");
  const auto& entries = j.at("entries");
  require(entries.is_array() &&
              static_cast<int>(entries.size()) == rows * cols,
          errc::invalid_input, path + ": entries length must equal rows*cols");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = entries.at(r * cols + c).get<double>();
    }
  }
  return m;
}

Matrix read_matrix_csv(const std::string& path) {
  const auto lines = read_lines(path);
  require(!lines.empty(), errc::invalid_input, path + ": empty matrix file");
  const auto header = split(lines[0], ',');
  require(header.size() == 3 && header[0] == "dim", errc::invalid_input,
          path + ": first line must read dim,<rows>,<cols>");
  const int rows = static_cast<int>(parse_number(header[1], path));
  const int cols = static_cast<int>(parse_number(header[2], path));
  require(rows >= 1 && cols >= 1, errc::invalid_input,
          path + ": matrix dimensions must be positive");
  require(static_cast<int>(lines.size()) == rows + 1, errc::invalid_input,
          path + ": expected " + std::to_string(rows) + " data rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto fields = split(lines[r + 1], ',');
    require(static_cast<int>(fields.size()) == cols, errc::invalid_input,
            path + ": row " + std::to_string(r) + " has wrong arity");
    for (int c = 0; c < cols; ++c) m(r, c) = parse_number(fields[c], path);
  }
  return m;
}

}  // namespace

Matrix read_matrix(const std::string& path) {
  return has_extension(path, ".json") ? read_matrix_json(path)
                                      : read_matrix_csv(path);
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ostringstream out;
  out << "dim," << m.rows() << "," << m.cols() << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ",";
      out << format_double(m(r, c));
    }
    out << "\n";
  }
  write_text_atomic(path, out.str());
}

Subspace read_subspace(const std::string& path) {
  return Subspace::from_spanning(read_matrix(path).transpose());
}

SampledSignal read_signal(const std::string& path, NormKind kind,
                          std::optional<DomainKind> hint) {
  auto lines = read_lines(path);
  require(!lines.empty(), errc::invalid_input, path + ": empty signal file");
  std::size_t start = 0;
  if (!looks_numeric(split(lines[0], ',')[0])) start = 1;
  require(lines.size() - start >= 2, errc::invalid_input,
          path + ": a signal needs at least two samples");

  std::vector<double> times;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    require(fields.size() >= 2, errc::invalid_input,
            path + ": signal rows need t plus at least one coordinate");
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(parse_number(f, path));
    if (!rows.empty()) {
      require(row.size() - 1 == rows.back().size(), errc::invalid_input,
              path + ": inconsistent row arity");
    }
    times.push_back(row.front());
    rows.push_back(std::vector<double>(row.begin() + 1, row.end()));
  }
  const int dim = static_cast<int>(rows.front().size());
  Matrix values(dim, static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < dim; ++j) values(j, static_cast<int>(i)) = rows[i][j];
  }
  return SampledSignal(Domain::from_points(times, hint), std::move(values),
                       kind);
}

void write_signal(const std::string& path, const SampledSignal& s) {
  std::ostringstream out;
  out << "t";
  for (int j = 1; j <= s.dim(); ++j) out << ",x" << j;
  out << "\n";
  for (int i = 0; i < s.size(); ++i) {
    out << format_double(s.time(i));
    for (int j = 0; j < s.dim(); ++j) {
      out << "," << format_double(s.values()(j, i));
    }
    out << "\n";
  }
  write_text_atomic(path, out.str());
}

WeightSeq read_weights(const std::string& path) {
  const auto lines = read_lines(path);
  require(!lines.empty(), errc::invalid_input, path + ": empty weight file");
  std::size_t start = 0;
  if (!looks_numeric(split(lines[0], ',')[0])) start = 1;
  std::map<int, double> weights;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    require(fields.size() == 2, errc::invalid_input,
            path + ": weight rows are n,p");
    const double n_raw = parse_number(fields[0], path);
    const int n = static_cast<int>(std::llround(n_raw));
    require(std::abs(n_raw - n) <= 1e-9, errc::invalid_input,
            path + ": weight indices must be integers");
    require(!weights.count(n), errc::invalid_input,
            path + ": duplicate weight index " + std::to_string(n));
    weights[n] = parse_number(fields[1], path);
  }
  require(!weights.empty(), errc::invalid_input, path + ": no weights");
  const int n_max = std::max(std::abs(weights.begin()->first),
                             std::abs(weights.rbegin()->first));
  Vector w(2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    const auto it = weights.find(n);
    require(it != weights.end(), errc::invalid_input,
            path + ": missing weight for n = " + std::to_string(n));
    w[n + n_max] = it->second;
  }
  return WeightSeq(std::move(w));
}

void write_weights(const std::string& path, const WeightSeq& w) {
  std::ostringstream out;
  out << "n,p\n";
  for (int n = -w.n_max(); n <= w.n_max(); ++n) {
    out << n << "," << format_double(w.at(n)) << "\n";
  }
  write_text_atomic(path, out.str());
}

MeasureDensity read_measure(const std::string& path) {
  const json j = parse_json_file(path);
  require(j.is_object(), errc::invalid_input, path + ": measure must be a JSON object");
  const std::string side_token = j.value("side", "line");
  MeasureSide side;
  if (side_token == "line") {
    side = MeasureSide::Line;
  } else if (side_token == "half_line") {
    side = MeasureSide::HalfLine;
  } else {
    fail(errc::invalid_input, path + ": side must be line or half_line");
  }

  MeasureDensity mu = MeasureDensity::atoms_only(side);
  if (j.contains("density") && !j.at("density").is_null()) {
    const json& d = j.at("density");
    const std::string type = d.value("type", "constant");
    if (type == "constant") {
      mu = MeasureDensity::constant(d.value("value", 1.0), side);
    } else if (type == "sampled") {
      require(d.contains("times") && d.contains("values"), errc::invalid_input,
              path + ": sampled density needs times and values");
      mu = MeasureDensity::sampled(d.at("times").get<std::vector<double>>(),
                                   d.at("values").get<std::vector<double>>(),
                                   side);
    } else {
      fail(errc::invalid_input, path + ": unknown density type '" + type + "'");
    }
  }
  if (j.contains("atoms")) {
    for (const auto& atom : j.at("atoms")) {
      require(atom.is_array() && atom.size() == 2, errc::invalid_input,
              path + ": atoms are [t, mass] pairs");
      mu.add_atom(atom.at(0).get<double>(), atom.at(1).get<double>());
    }
  }
  return mu;
}

void write_measure(const std::string& path, const MeasureDensity& mu) {
  json j;
  j["side"] = to_string(mu.side());
  if (mu.is_constant()) {
    j["density"] = {{"type", "constant"}, {"value", mu.constant_value()}};
  } else {
    fail(errc::invalid_input,
         "writing sampled densities is not supported; supply them as input");
  }
  json atoms = json::array();
  for (const auto& [t, mass] : mu.atoms()) atoms.push_back({t, mass});
  j["atoms"] = atoms;
  write_text_atomic(path, j.dump(2) + "\n");
}

ProcessEnsemble read_ensemble(const std::string& path, std::uint64_t seed) {
  const auto lines = read_lines(path);
  require(!lines.empty(), errc::invalid_input, path + ": empty ensemble file");
  std::size_t start = 0;
  if (!looks_numeric(split(lines[0], ',')[0])) start = 1;
  require(lines.size() > start, errc::invalid_input, path + ": no data rows");

  int dim = -1;
  std::map<double, std::map<int, std::vector<double>>> cells;
  int max_draw = -1;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    require(fields.size() >= 3, errc::invalid_input,
            path + ": ensemble rows are t,draw_id,x1..xd");
    if (dim < 0) dim = static_cast<int>(fields.size()) - 2;
    require(static_cast<int>(fields.size()) == dim + 2, errc::invalid_input,
            path + ": inconsistent row arity");
    const double t = parse_number(fields[0], path);
    const double draw_raw = parse_number(fields[1], path);
    const int draw = static_cast<int>(std::llround(draw_raw));
    require(draw >= 0 && std::abs(draw_raw - draw) <= 1e-9, errc::invalid_input,
            path + ": draw ids must be nonnegative integers");
    std::vector<double> value(dim);
    for (int j = 0; j < dim; ++j) value[j] = parse_number(fields[2 + j], path);
    require(!cells[t].count(draw), errc::invalid_input,
            path + ": duplicate (t, draw) pair");
    cells[t][draw] = std::move(value);
    max_draw = std::max(max_draw, draw);
  }
  const int draws = max_draw + 1;
  require(draws >= 2, errc::invalid_input, path + ": an ensemble needs >= 2 draws");

  std::vector<double> times;
  for (const auto& [t, _] : cells) times.push_back(t);
  const Domain domain = Domain::from_points(times);

  Matrix stacked(draws * dim, domain.size());
  for (int i = 0; i < domain.size(); ++i) {
    const auto& by_draw = cells.at(times[i]);
    require(static_cast<int>(by_draw.size()) == draws, errc::invalid_input,
            path + ": missing draws at t = " + format_double(times[i]));
    for (const auto& [draw, value] : by_draw) {
      for (int j = 0; j < dim; ++j) stacked(draw * dim + j, i) = value[j];
    }
  }
  return ProcessEnsemble(domain, std::move(stacked), draws, seed);
}

void write_ensemble(const std::string& path, const ProcessEnsemble& x) {
  std::ostringstream out;
  out << "t,draw_id";
  for (int j = 1; j <= x.dim(); ++j) out << ",x" << j;
  out << "\n";
  for (int k = 0; k < x.draws(); ++k) {
    for (int i = 0; i < x.domain().size(); ++i) {
      out << format_double(x.domain().point(i)) << "," << k;
      for (int j = 0; j < x.dim(); ++j) {
        out << "," << format_double(x.stacked()(k * x.dim() + j, i));
      }
      out << "\n";
    }
  }
  write_text_atomic(path, out.str());
}

Vector read_vector(const std::string& path) {
  std::ifstream file(path);
  require(file.good(), errc::invalid_input, "cannot open file: " + path);
  std::vector<double> values;
  std::string token;
  while (file >> token) {
    for (auto& piece : split(token, ',')) {
      if (piece.empty()) continue;
      values.push_back(parse_number(piece, path));
    }
  }
  require(!values.empty(), errc::invalid_input, path + ": no numbers found");
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Vector parse_vector(const std::string& text) {
  const auto list = parse_double_list(text);
  Vector v(static_cast<Eigen::Index>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i) v[static_cast<Eigen::Index>(i)] = list[i];
  return v;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (auto& piece : split(text, ',')) {
    std::string trimmed = piece;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    const auto last = trimmed.find_last_not_of(" \t");
    if (last != std::string::npos) trimmed.erase(last + 1);
    if (trimmed.empty()) continue;
    out.push_back(parse_number(trimmed, "list"));
  }
  require(!out.empty(), errc::invalid_input, "empty number list");
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  require(file.good(), errc::invalid_input, "cannot open file: " + path);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    require(file.good(), errc::invalid_input, "cannot open file for writing: " + tmp);
    file << content;
    file.flush();
    require(file.good(), errc::invalid_input, "write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  require(!ec, errc::invalid_input, "cannot move report into place: " + path);
}

std::string file_digest(const std::string& path) {
  const std::string bytes = read_text(path);
  std::uint64_t hash = 14695981039346656037ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace apergo::io
