#pragma once

namespace isokit {

/// Selects between the OpenMP kernel and its serial reference.
enum class Execution { serial, parallel };

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace isokit
