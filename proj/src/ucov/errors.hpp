/*
  Copyright (c) 2026 ucov developers

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef UCOV_ERRORS_HPP
#define UCOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ucov {

// Failure categories shared by the library, the C API and the CLI exit codes.
enum class errc {
    contract,      // caller broke a documented signature contract
    domain,        // argument outside the mathematical domain
    range,         // index or window outside the representable range
    precondition,  // hypothesis of the underlying statement not satisfied
    resource,      // refused: would exceed a memory or size guard
    unsupported,   // configuration the library does not implement
    numeric,       // evaluation lost validity (non-finite or degenerate)
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::contract: return "contract";
        case errc::domain: return "domain";
        case errc::range: return "range";
        case errc::precondition: return "precondition";
        case errc::resource: return "resource";
        case errc::unsupported: return "unsupported";
        case errc::numeric: return "numeric";
    }
    return "unknown";
}

}  // namespace ucov

#endif
