#include "ndlu/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace ndlu {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto comma = line.find(',');
    out.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) return out;
    line.remove_prefix(comma + 1);
  }
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view field, std::string_view source, std::size_t line) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    fail(source, line, "'" + std::string(field) + "' is not a number");
  }
  return v;
}

// Builds the solution, turning InvalidSolutionError into a located message.
Solution make_solution(std::string_view id, std::vector<double> obj, std::string_view source,
                       std::size_t line) {
  if (id.empty()) fail(source, line, "empty id");
  try {
    return Solution(std::string(id), std::move(obj));
  } catch (const InvalidSolutionError& e) {
    fail(source, line, e.what());
  }
}

}  // namespace

std::vector<Solution> read_csv(std::istream& in, const std::vector<std::string>& negate,
                               std::string_view source) {
  std::string text;
  std::size_t line_no = 0;
  std::vector<std::string> names;
  while (std::getline(in, text)) {
    ++line_no;
    if (!trim(text).empty()) break;
  }
  if (trim(text).empty()) fail(source, line_no, "missing header row");
  for (auto f : split(text)) names.emplace_back(f);
  if (names.size() < 3) fail(source, line_no, "header needs an id column and at least two objectives");
  const std::size_t m = names.size() - 1;

  std::vector<bool> flip(m, false);
  for (const auto& tok : negate) {
    std::size_t col = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), col);
    if (ec == std::errc{} && ptr == tok.data() + tok.size()) {
      if (col < 1 || col > m) {
        throw InputError("--negate: objective index " + tok + " outside 1.." + std::to_string(m));
      }
    } else {
      auto it = std::find(names.begin() + 1, names.end(), tok);
      if (it == names.end()) throw InputError("--negate: no objective column named '" + tok + "'");
      col = static_cast<std::size_t>(it - names.begin());
    }
    flip[col - 1] = true;
  }

  std::vector<Solution> out;
  std::unordered_set<std::string> seen;
  while (std::getline(in, text)) {
    ++line_no;
    if (trim(text).empty()) continue;
    const auto fields = split(text);
    if (fields.size() != m + 1) {
      fail(source, line_no,
           "expected " + std::to_string(m + 1) + " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> obj;
    obj.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double v = parse_number(fields[i + 1], source, line_no);
      obj.push_back(flip[i] ? -v : v);
    }
    if (!seen.emplace(fields[0]).second) {
      fail(source, line_no, "duplicate id '" + std::string(fields[0]) + "'");
    }
    out.push_back(make_solution(fields[0], std::move(obj), source, line_no));
  }
  return out;
}

nlohmann::json to_json(const FrontSet& fs) {
  nlohmann::json fronts = nlohmann::json::array();
  for (const auto& f : fs.fronts()) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& s : f) members.push_back({{"id", s.id}, {"obj", s.objectives}});
    fronts.push_back(std::move(members));
  }
  return {{"m", fs.objectives()}, {"fronts", std::move(fronts)}};
}

FrontSet front_set_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("fronts")) {
      throw InputError("dump must be an object with \"m\" and \"fronts\"");
    }
    const auto m = j.at("m").get<std::size_t>();
    const auto& fronts = j.at("fronts");
    if (!fronts.is_array()) throw InputError("\"fronts\" must be an array");
    if (m == 0 && !fronts.empty()) throw InputError("\"m\" is 0 but fronts are present");
    std::vector<Front> out;
    for (const auto& jf : fronts) {
      if (!jf.is_array()) throw InputError("each front must be an array");
      Front f;
      for (const auto& js : jf) {
        const auto& obj = js.at("obj");
        if (!obj.is_array()) throw InputError("\"obj\" must be an array");
        std::vector<double> v;
        for (const auto& x : obj) {
          if (!x.is_number()) throw InputError("objective values must be numbers");
          v.push_back(x.get<double>());
        }
        f.emplace_back(js.at("id").get<std::string>(), std::move(v));
      }
      out.push_back(std::move(f));
    }
    return FrontSet(m, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed dump: ") + e.what());
  } catch (const InvalidSolutionError& e) {
    throw InputError(std::string("malformed dump: ") + e.what());
  }
}

std::string dump(const FrontSet& fs) { return to_json(fs).dump(2) + "\n"; }

FrontSet load_front_set(std::istream& in, std::string_view source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
  try {
    return front_set_from_json(j);
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string_view to_string(StepKind k) noexcept {
  switch (k) {
    case StepKind::Insert:
      return "insert";
    case StepKind::Delete:
      return "delete";
    case StepKind::Lookup:
      return "lookup";
  }
  return "?";
}

Workload parse_workload(std::istream& in, const FrontSet& initial, std::string_view source) {
  std::unordered_set<std::string> live;
  for (const auto& f : initial.fronts()) {
    for (const auto& s : f) live.insert(s.id);
  }
  std::size_t m = initial.objectives();

  Workload w;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto t = trim(text);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split(t);
    const auto op = fields[0];
    if (fields.size() < 2 || fields[1].empty()) fail(source, line_no, "missing id");
    std::string id(fields[1]);

    if (op == "insert") {
      std::vector<double> obj;
      for (std::size_t i = 2; i < fields.size(); ++i) {
        obj.push_back(parse_number(fields[i], source, line_no));
      }
      Solution s = make_solution(id, std::move(obj), source, line_no);
      if (m == 0) m = s.dimension();
      if (s.dimension() != m) {
        fail(source, line_no,
             "insert of '" + id + "' has " + std::to_string(s.dimension()) +
                 " objectives, expected " + std::to_string(m));
      }
      if (!live.insert(id).second) fail(source, line_no, "insert of live id '" + id + "'");
      w.push_back({StepKind::Insert, std::move(id), std::move(s.objectives)});
    } else if (op == "delete" || op == "lookup") {
      if (fields.size() != 2) fail(source, line_no, std::string(op) + " takes only an id");
      if (!live.contains(id)) fail(source, line_no, std::string(op) + " of missing id '" + id + "'");
      const bool del = op == "delete";
      if (del) live.erase(id);
      w.push_back({del ? StepKind::Delete : StepKind::Lookup, std::move(id), {}});
    } else {
      fail(source, line_no, "unknown step '" + std::string(op) + "'");
    }
  }
  return w;
}

void write_workload(std::ostream& out, const Workload& w) {
  for (const auto& s : w) {
    out << to_string(s.kind) << ',' << s.id;
    for (double v : s.objectives) out << ',' << format_number(v);
    out << '\n';
  }
}

}  // namespace ndlu
