#include "ellcirc/export/json_writer.hpp"

#include <cmath>
#include <cstdio>

#include "ellcirc/errors.hpp"

namespace ellcirc::exporting {
namespace {

void newline(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out += '\n';
  out.append(static_cast<std::size_t>(indent * depth), ' ');
}

void write_number(std::string& out, double x) {
  if (!std::isfinite(x)) {
    throw ConsistencyError("refusing to serialize a non-finite number");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const char* sep = indent < 0 ? ":" : ": ";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(out, indent, depth + 1);
        out += Json(key).dump();
        out += sep;
        write(out, value, indent, depth + 1);
      }
      newline(out, indent, depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        newline(out, indent, depth + 1);
        write(out, value, indent, depth + 1);
      }
      newline(out, indent, depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& doc, int indent) {
  std::string out;
  write(out, doc, indent, 0);
  out += '\n';
  return out;
}

}  // namespace ellcirc::exporting
