#include "photonpos/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace photonpos {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["point"] = {w.point[0], w.point[1], w.point[2]};
  j["entry"] = w.entry;
  j["value"] = {w.value.real(), w.value.imag()};
  return j;
}

ordered_json condition_json(const ConditionReport& c) {
  ordered_json j;
  j["condition"] = c.condition;
  j["status"] = to_string(c.status);
  j["expected"] = to_string(c.expected);
  j["witness"] = c.witness ? witness_json(*c.witness) : ordered_json(nullptr);
  j["tolerance"] = c.tolerance;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["note"] = c.note;
  return j;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt(Complex z) {
  std::string s = fmt(z.real());
  s += z.imag() < 0 ? "-" : "+";
  s += fmt(std::abs(z.imag()));
  s += "i";
  return s;
}

}  // namespace

std::string render_structured(const ReportDocument& doc) {
  ordered_json j;
  ordered_json cfg;
  cfg["seed"] = doc.config.seed;
  cfg["samples"] = doc.config.samples;
  cfg["tolerance"] = doc.config.tolerance;
  cfg["shell"] = {doc.config.shell_min, doc.config.shell_max};
  cfg["axis_margin"] = doc.config.axis_margin;
  j["config"] = cfg;
  j["suites"] = ordered_json::array();
  for (const auto& suite : doc.suites) {
    ordered_json s;
    s["name"] = suite.name;
    s["representation"] = suite.representation;
    s["conditions"] = ordered_json::array();
    for (const auto& c : suite.conditions)
      s["conditions"].push_back(condition_json(c));
    j["suites"].push_back(std::move(s));
  }
  j["verdict"] = doc.success ? "success" : "failure";
  return j.dump(2) + "\n";
}

std::string render_summary(const ReportDocument& doc) {
  std::string out;
  out += "config: seed=" + std::to_string(doc.config.seed) +
         " samples=" + std::to_string(doc.config.samples) +
         " tol=" + fmt(doc.config.tolerance) + " shell=[" +
         fmt(doc.config.shell_min) + "," + fmt(doc.config.shell_max) +
         "] axis-margin=" + fmt(doc.config.axis_margin) + "\n";
  for (const auto& suite : doc.suites) {
    out += "\n" + suite.name + " [" + suite.representation + "]\n";
    for (const auto& c : suite.conditions) {
      std::string status = to_string(c.status);
      status.resize(12, ' ');
      out += "  " + status + " (expect " + to_string(c.expected) + ")  " +
             c.condition;
      if (c.witness) {
        out += "   witness " + c.witness->entry + " = " + fmt(c.witness->value) +
               " at (" + fmt(c.witness->point[0]) + ", " +
               fmt(c.witness->point[1]) + ", " + fmt(c.witness->point[2]) + ")";
      }
      if (!c.note.empty()) out += "   [" + c.note + "]";
      if (!c.matches_expectation()) out += "   <-- MISMATCH";
      out += "\n";
    }
  }
  out += "\nverdict: " + std::string(doc.success ? "success" : "failure") +
         "\n";
  return out;
}

}  // namespace photonpos
