#include "dybe.h"

#include <new>
#include <string>

#include "dybe/runner.hpp"

struct dybe_result {
  int status = DYBE_BAD_REQUEST;
  std::string output;
  std::string report;
};

extern "C" {

dybe_result* dybe_run_json(const char* request_json) {
  dybe_result* r = new (std::nothrow) dybe_result;
  if (!r) return nullptr;
  try {
    dybe::RunResult rr = dybe::run_request(request_json ? request_json : "");
    r->status = rr.exit_code;
    r->output = std::move(rr.output_json);
    r->report = std::move(rr.report_text);
  } catch (const std::exception& e) {  // run_request shouldn't throw; belt and braces at the C boundary
    r->status = DYBE_BAD_REQUEST;
    r->report = std::string("error: ") + e.what() + "\n";
  } catch (...) {
    r->status = DYBE_BAD_REQUEST;
    r->report = "error: unexpected failure\n";
  }
  return r;
}

int dybe_result_status(const dybe_result* r) { return r ? r->status : DYBE_BAD_REQUEST; }

const char* dybe_result_output(const dybe_result* r) { return r ? r->output.c_str() : ""; }

const char* dybe_result_report(const dybe_result* r) { return r ? r->report.c_str() : ""; }

void dybe_result_free(dybe_result* r) { delete r; }

const char* dybe_version(void) { return "0.1.0"; }

}  // extern "C"
