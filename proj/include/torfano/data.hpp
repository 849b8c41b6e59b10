#pragma once

namespace torfano::data {

/// The built-in catalog (same text as data/catalog.torfano).
const char* catalog_text();

/// All case files concatenated, each preceded by a "%%case-file <id>" line.
const char* case_files_text();

}  // namespace torfano::data
