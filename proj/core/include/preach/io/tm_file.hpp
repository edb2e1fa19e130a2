#pragma once

#include <filesystem>
#include <string>

#include "preach/tm/machine.hpp"

namespace preach::io {

/// Line-based machine format; '#' starts a comment.
///
///     states: q0 q1 acc rej
///     alphabet: 0 1
///     blank: _
///     initial: q0
///     accept: acc
///     reject: rej
///     q0 0 -> q1 1 R
///
/// Symbols are single characters; moves are L, R or S. Errors carry the line number.
tm::MachineDescription parseTmDescription(const std::string& text);
tm::TuringMachine parseTmText(const std::string& text);
tm::TuringMachine parseTmFile(const std::filesystem::path& path);

std::string serializeTm(const tm::TuringMachine& m);

}  // namespace preach::io
