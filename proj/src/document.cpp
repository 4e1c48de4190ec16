#include <chainproj/document.hpp>
#include <chainproj/error.hpp>

#include <fstream>
#include <sstream>

namespace chainproj {

using nlohmann::json;

json to_json(const Poset& poset, std::span<const Chain> chains) {
  json events = json::array();
  for (EventId id : poset.events()) events.push_back(raw(id));
  json covers = json::array();
  for (auto [a, b] : poset.cover_pairs()) covers.push_back(json::array({raw(a), raw(b)}));
  json chain_list = json::array();
  for (const Chain& chain : chains) {
    json ids = json::array();
    json values = json::array();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      ids.push_back(raw(chain.at(i)));
      values.push_back(to_string(chain.value_at(i)));
    }
    chain_list.push_back({{"id", chain.id()}, {"events", ids}, {"valuations", values}});
  }
  return {{"events", events}, {"covers", covers}, {"chains", chain_list}};
}

namespace {

EventId event_from(const json& value) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > static_cast<long long>(UINT32_MAX)) {
    throw Error(ErrorCode::ParseError, "event ids must be non-negative 32-bit integers");
  }
  return EventId{value.get<std::uint32_t>()};
}

const json& member(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

}  // namespace

PosetDocument document_from_json(const json& doc) {
  PosetDocument out;
  const json& events = member(doc, "events");
  if (!events.is_array()) throw Error(ErrorCode::ParseError, "'events' must be an array");
  for (const json& e : events) out.poset.add_event(event_from(e));

  const json& covers = member(doc, "covers");
  if (!covers.is_array()) throw Error(ErrorCode::ParseError, "'covers' must be an array");
  for (const json& pair : covers) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::ParseError, "each cover must be a two-element array");
    }
    out.poset.add_influence(event_from(pair[0]), event_from(pair[1]));
  }
  out.poset.freeze();

  if (doc.contains("chains")) {
    const json& chains = doc.at("chains");
    if (!chains.is_array()) throw Error(ErrorCode::ParseError, "'chains' must be an array");
    for (const json& c : chains) {
      const json& id = member(c, "id");
      const json& ids = member(c, "events");
      const json& values = member(c, "valuations");
      if (!id.is_string() || !ids.is_array() || !values.is_array()) {
        throw Error(ErrorCode::ParseError, "malformed chain entry");
      }
      std::vector<EventId> elements;
      std::vector<Rational> valuations;
      for (const json& e : ids) elements.push_back(event_from(e));
      for (const json& v : values) {
        if (!v.is_string()) throw Error(ErrorCode::ParseError, "valuations must be \"p/q\" strings");
        valuations.push_back(parse_rational(v.get<std::string>()));
      }
      Chain chain(id.get<std::string>(), std::move(elements), std::move(valuations));
      chain.validate(out.poset);
      for (const Chain& other : out.chains) {
        if (other.id() == chain.id()) throw Error(ErrorCode::ParseError, "duplicate chain id '" + chain.id() + "'");
      }
      out.chains.push_back(std::move(chain));
    }
  }
  return out;
}

PosetDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return document_from_json(doc);
}

PosetDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

std::string to_dot(const Poset& poset) {
  std::ostringstream out;
  out << "digraph {\n";
  for (EventId id : poset.events()) out << "  " << raw(id) << ";\n";
  for (auto [a, b] : poset.cover_pairs()) out << "  " << raw(a) << " -> " << raw(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chainproj
