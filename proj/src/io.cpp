#include "rmrw/io.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace rmrw {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CellState> read_cell_states(std::istream& in) {
  std::vector<CellState> states;
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = strip(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    std::vector<double> levels;
    std::stringstream ss(body);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        levels.push_back(std::stod(strip(field)));
      } catch (const std::exception&) {
        throw std::invalid_argument("cell-state CSV: bad level '" + field + "'");
      }
    }
    states.emplace_back(std::move(levels));
  }
  return states;
}

std::vector<CellState> read_cell_states_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  return read_cell_states(in);
}

std::string cell_state_csv(const CellState& s) {
  std::string out;
  char buf[64];
  for (int j = 1; j <= s.n(); ++j) {
    if (j > 1) out += ',';
    // Shortest representation that parses back to the same double.
    const auto res = std::to_chars(buf, buf + sizeof(buf), s[j]);
    out.append(buf, res.ptr);
  }
  return out;
}

std::vector<int> parse_int_csv(const std::string& line) {
  std::vector<int> vals;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const std::string f = strip(field);
    try {
      std::size_t used = 0;
      vals.push_back(std::stoi(f, &used));
      if (used != f.size()) throw std::invalid_argument(f);
    } catch (const std::exception&) {
      throw std::invalid_argument("integer CSV: bad field '" + field + "'");
    }
  }
  return vals;
}

std::string perm_csv(const MsPermutation& perm) {
  std::ostringstream out;
  for (int j = 0; j < perm.n(); ++j) {
    if (j > 0) out << ',';
    out << perm.inv[j];
  }
  return out.str();
}

WomTableFile read_wom_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  nlohmann::json doc;
  in >> doc;
  if (doc.value("schema", 1) != 1)
    throw std::invalid_argument("wom table: unsupported schema");
  WomTableFile tf;
  tf.n = doc.at("n").get<int>();
  tf.w_s = doc.at("w_s").get<double>();
  tf.w_x = doc.at("w_x").get<double>();
  for (const auto& row : doc.at("table")) {
    std::vector<BinaryWord> words;
    for (const auto& bits : row) {
      BinaryWord w = BinaryWord::from_string(bits.get<std::string>());
      if (w.size() != tf.n)
        throw std::invalid_argument("wom table: codeword length != n");
      words.push_back(std::move(w));
    }
    tf.table.push_back(std::move(words));
  }
  return tf;
}

std::string wom_table_json(const WomTableFile& tf) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["n"] = tf.n;
  doc["w_s"] = tf.w_s;
  doc["w_x"] = tf.w_x;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : tf.table) {
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const BinaryWord& w : row) words.push_back(w.to_string());
    rows.push_back(words);
  }
  doc["table"] = rows;
  return doc.dump(2);
}

}  // namespace rmrw
