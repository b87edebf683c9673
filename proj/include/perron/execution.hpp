#pragma once

namespace perron {

/// serial keeps a plain loop as the reference path; parallel fans out with
/// OpenMP. Both produce identical results.
enum class Execution { serial, parallel };

}  // namespace perron
