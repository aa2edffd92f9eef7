#ifndef TEMPSPAN_IO_HPP
#define TEMPSPAN_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "tempspan/graph.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

/// Text formats.
///
/// Temporal graph (.tg):
///     tg 1
///     biclique <nA> <nB>        or        clique <n>
///     <i> <j> <label>                     one line per edge
/// Edge lines are sorted by (i, j); bi-cliques list i = A-index, j = B-index
/// row-major, cliques list i < j. Every edge of the complete graph must be
/// present exactly once.
///
/// Spanner (.sp):
///     sp 1 <bi|full> <count>
///     <i> <j>                             one line per edge, sorted
///
/// Writers emit exactly this shape (newline after every line, single spaces);
/// readers reject anything else with ParseError.

using TemporalGraphFile = std::variant<TemporalBiClique, TemporalClique>;

TemporalGraphFile read_tg(std::istream& in);
TemporalGraphFile read_tg_file(const std::string& path);

void write_tg(std::ostream& out, const TemporalBiClique& g);
void write_tg(std::ostream& out, const TemporalClique& g);
void write_tg(std::ostream& out, const TemporalGraphFile& g);
void write_tg_file(const std::string& path, const TemporalGraphFile& g);

Spanner read_sp(std::istream& in);
Spanner read_sp_file(const std::string& path);

void write_sp(std::ostream& out, const Spanner& s);
void write_sp_file(const std::string& path, const Spanner& s);

}

#endif
