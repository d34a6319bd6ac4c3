#ifndef OSBORN_LOOP_IO_HPP
#define OSBORN_LOOP_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "osborn/loop_table.hpp"

namespace osborn {

/// Text format: optional '#' comment lines, a line holding n, then n rows
/// of n whitespace separated 1-based entries.
LoopTable read_loop(std::istream& in);
LoopTable read_loop_string(const std::string& text);
LoopTable read_loop_file(const std::string& path);

/// Reads a stream of loops separated by lines consisting of "---".
std::vector<LoopTable> read_loop_stream(std::istream& in);

/// Writes the table; each entry of `comments` becomes a "# " line.
void write_loop(std::ostream& out, const LoopTable& L,
                const std::vector<std::string>& comments = {});
std::string loop_to_string(const LoopTable& L,
                           const std::vector<std::string>& comments = {});

}  // namespace osborn

#endif  // OSBORN_LOOP_IO_HPP
