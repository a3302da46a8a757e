#include "ualg/io.hpp"

#include <fstream>
#include <set>

namespace ualg::io {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw AlgebraError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::vector<std::string> strings(const json& doc) {
  if (!doc.is_array()) throw AlgebraError("expected an array of strings");
  return doc.get<std::vector<std::string>>();
}

json table_to_json(const FunctionTable& table, const Carrier& carrier) {
  json rows = json::array();
  std::vector<Elem> args(table.arity().size());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    decode_point(r, table.carrier_size(), args);
    json names = json::array();
    for (Elem a : args) names.push_back(carrier.name(a));
    rows.push_back({{"args", names}, {"value", carrier.name(table.values()[r])}});
  }
  return rows;
}

}  // namespace

Algebra algebra_from_json(const json& doc) {
  Carrier carrier(strings(field(doc, "elements")));
  if (carrier.empty()) throw AlgebraError("empty carrier");
  const std::size_t n = carrier.size();
  std::vector<Operation> ops;
  for (const auto& op : field(doc, "operations")) {
    const std::string symbol = field(op, "symbol").get<std::string>();
    Rank rank(strings(field(op, "rank")));
    const auto expected = checked_power(n, rank.size());
    std::vector<Elem> values(expected);
    std::vector<bool> seen(expected, false);
    std::size_t filled = 0;
    std::vector<Elem> args(rank.size());
    for (const auto& row : field(op, "table")) {
      const auto names = strings(field(row, "args"));
      if (names.size() != rank.size()) {
        throw AlgebraError("row of \"" + symbol + "\" has " + std::to_string(names.size()) +
                           " arguments for rank size " + std::to_string(rank.size()));
      }
      for (std::size_t i = 0; i < names.size(); ++i) args[i] = carrier.at(names[i]);
      const std::size_t code = encode_point(args, n);
      if (seen[code]) throw AlgebraError("duplicate table row in \"" + symbol + "\"");
      seen[code] = true;
      ++filled;
      values[code] = carrier.at(field(row, "value").get<std::string>());
    }
    if (filled != expected) {
      throw AlgebraError("partial table: \"" + symbol + "\" has " + std::to_string(filled) + " of " +
                         std::to_string(expected) + " rows");
    }
    ops.emplace_back(symbol, FunctionTable(n, std::move(rank), std::move(values)));
  }
  if (ops.empty()) throw AlgebraError("empty operation list");
  const std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : "algebra";
  return Algebra(name, std::move(carrier), std::move(ops));
}

json algebra_to_json(const Algebra& alg) {
  json ops = json::array();
  for (const auto& op : alg.ops()) {
    ops.push_back({{"symbol", op.symbol()},
                   {"rank", op.rank().labels()},
                   {"table", table_to_json(op.table(), alg.carrier())}});
  }
  return {{"name", alg.name()}, {"elements", alg.carrier().names()}, {"operations", ops}};
}

Frame frame_from_json(const json& doc, const Carrier& carrier) {
  Frame frame{Rank(strings(field(doc, "X"))), {}};
  std::vector<std::optional<Elem>> values(frame.X.size());
  for (const auto& entry : field(doc, "U")) {
    const auto index = field(entry, "index").get<std::string>();
    const auto x = frame.X.find(index);
    if (!x) throw AlgebraError("frame index \"" + index + "\" not in X");
    if (values[*x]) throw AlgebraError("frame index \"" + index + "\" assigned twice");
    values[*x] = carrier.at(field(entry, "value").get<std::string>());
  }
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (!values[x]) throw AlgebraError("frame index \"" + frame.X.label(x) + "\" has no value");
    frame.U.push_back(*values[x]);
  }
  return frame;
}

json frame_to_json(const Frame& frame, const Carrier& carrier) {
  json u = json::array();
  for (std::size_t x = 0; x < frame.X.size(); ++x) {
    u.push_back({{"index", frame.X.label(x)}, {"value", carrier.name(frame.U.at(x))}});
  }
  return {{"X", frame.X.labels()}, {"U", u}};
}

gallery::PertProject pert_from_json(const json& doc) {
  std::map<std::string, gallery::Schedule> rows;
  for (const auto& entry : field(doc, "M")) {
    const auto event = field(entry, "event").get<std::string>();
    gallery::Schedule row;
    for (const auto& succ : field(entry, "successors")) {
      const auto time = field(succ, "time");
      if (!time.is_number_integer() || time.get<std::int64_t>() < 0) {
        throw AlgebraError("times must be natural numbers");
      }
      if (!row.emplace(field(succ, "event").get<std::string>(), time.get<gallery::Time>()).second) {
        throw AlgebraError("duplicate successor of \"" + event + "\"");
      }
    }
    if (!rows.emplace(event, std::move(row)).second) {
      throw AlgebraError("duplicate row for event \"" + event + "\"");
    }
  }
  return gallery::make_project(strings(field(doc, "events")), std::move(rows));
}

json pert_to_json(const gallery::PertProject& project) {
  json m = json::array();
  for (const auto& x : project.events) {
    json succ = json::array();
    for (const auto& [y, t] : project.successors.at(x)) succ.push_back({{"event", y}, {"time", t}});
    m.push_back({{"event", x}, {"successors", succ}});
  }
  return {{"events", project.events}, {"M", m}};
}

json monoid_to_json(const EndowedMonoid& monoid) {
  json delta = json::array();
  for (const auto& d : monoid.delta) delta.push_back(d.values);
  json images = json::array();
  for (const auto& op : monoid.image_ops) {
    images.push_back({{"symbol", op.symbol()}, {"rank", op.rank().labels()}, {"table", op.table().values()}});
  }
  return {{"delta", delta}, {"unit", monoid.unit}, {"product", monoid.product}, {"image_ops", images}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw AlgebraError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw AlgebraError("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace ualg::io
