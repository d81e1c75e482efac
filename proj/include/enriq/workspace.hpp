#pragma once

#include <map>
#include <string>

#include "enriq/serialize.hpp"

namespace enriq {

/// Named object store; every object re-validates its invariants on load.
struct WorkspaceObject {
  std::string type;  // lattice | embedding | generatrix | catalog
  Json value;        // canonical form
  std::string note;  // provenance, free text
};

struct WorkspaceFile {
  int version = 1;
  std::map<std::string, WorkspaceObject> objects;
};

WorkspaceFile workspace_from_json(const Json& j);
Json workspace_to_json(const WorkspaceFile& w);

/// load -> validate -> canonical dump; byte-identical for canonical input.
std::string workspace_roundtrip(const std::string& bytes);

/// Deterministic report wrapper for CLI commands. Everything in the body is
/// digest-covered and must be byte-stable; timing stays outside.
struct Report {
  std::vector<std::string> command;
  std::string inputs_digest;
  Json results;
};

Json report_to_json(const Report& r);
std::string digest_of(const std::string& bytes);

}  // namespace enriq
