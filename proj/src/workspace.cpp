#include "enriq/workspace.hpp"

#include <sstream>

namespace enriq {

namespace {

void validate_object(const std::string& name, const WorkspaceObject& obj) {
  try {
    if (obj.type == "lattice") {
      lattice_from_json(obj.value);
    } else if (obj.type == "embedding") {
      embedding_from_json(obj.value);
    } else if (obj.type == "generatrix") {
      generatrix_from_json(obj.value);
    } else if (obj.type == "catalog") {
      catalog_from_json(obj.value);
    } else {
      throw SchemaError("unknown object type '" + obj.type + "'");
    }
  } catch (const Error& e) {
    throw SchemaError("workspace object '" + name + "': " + e.what());
  }
}

// Canonical re-serialization of a loaded object (sorted keys, validated).
Json canonical_value(const WorkspaceObject& obj) {
  if (obj.type == "lattice") return lattice_to_json(lattice_from_json(obj.value));
  if (obj.type == "embedding") return embedding_to_json(embedding_from_json(obj.value));
  if (obj.type == "generatrix") return generatrix_to_json(generatrix_from_json(obj.value));
  if (obj.type == "catalog") return catalog_to_json(catalog_from_json(obj.value));
  throw SchemaError("unknown object type '" + obj.type + "'");
}

}  // namespace

WorkspaceFile workspace_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("version") || !j.contains("objects"))
    throw SchemaError("workspace requires version and objects");
  WorkspaceFile w;
  w.version = j["version"].get<int>();
  if (w.version != 1) throw SchemaError("unsupported workspace version");
  if (!j["objects"].is_object()) throw SchemaError("workspace objects must be a map");
  for (const auto& [name, entry] : j["objects"].items()) {
    WorkspaceObject obj;
    if (!entry.is_object() || !entry.contains("type") || !entry.contains("value"))
      throw SchemaError("workspace object '" + name + "' requires type and value");
    obj.type = entry["type"].get<std::string>();
    obj.value = entry["value"];
    if (entry.contains("note")) obj.note = entry["note"].get<std::string>();
    validate_object(name, obj);
    w.objects.emplace(name, std::move(obj));
  }
  return w;
}

Json workspace_to_json(const WorkspaceFile& w) {
  Json j;
  j["version"] = w.version;
  Json objects = Json::object();
  for (const auto& [name, obj] : w.objects) {
    Json entry;
    entry["type"] = obj.type;
    entry["value"] = canonical_value(obj);
    if (!obj.note.empty()) entry["note"] = obj.note;
    objects[name] = std::move(entry);
  }
  j["objects"] = std::move(objects);
  return j;
}

std::string workspace_roundtrip(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("workspace parse error: ") + e.what());
  }
  WorkspaceFile w = workspace_from_json(j);
  return canonical_dump(workspace_to_json(w));
}

Json report_to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs_digest;
  j["results"] = r.results;
  j["seed"] = 0;  // fixed: every run is deterministic
  j["version"] = 1;
  return j;
}

std::string digest_of(const std::string& bytes) {
  std::ostringstream os;
  os << "fnv1a:" << std::hex << fnv1a(bytes);
  return os.str();
}

}  // namespace enriq
