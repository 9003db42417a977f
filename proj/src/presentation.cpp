#include "pqw/presentation.hpp"

#include <sstream>

#include "pqw/errors.hpp"

namespace pqw {

Presentation::Presentation(std::vector<std::string> gen_names, std::vector<Word> rels)
    : ngens(int(gen_names.size())), names(std::move(gen_names)) {
  for (const Word& w : rels) add_relator(w);
  check_valid();
}

std::string Presentation::gen_name(int g) const {
  check_internal(g >= 1 && g <= ngens, "generator index out of range");
  if (!names.empty()) return names[std::size_t(g) - 1];
  return "g" + std::to_string(g);
}

int Presentation::gen_by_name(const std::string& name) const {
  for (int g = 1; g <= ngens; ++g) {
    if (gen_name(g) == name) return g;
  }
  return -1;
}

void Presentation::add_relator(const Word& w) {
  Word r = Word::from_letters(w.letters());
  if (r.empty()) return;
  check_input(r.max_generator() <= ngens, "relator mentions unknown generator");
  relators.push_back(std::move(r));
}

void Presentation::check_valid() const {
  check_input(ngens >= 0, "negative generator count");
  check_input(names.empty() || int(names.size()) == ngens,
              "generator name list has wrong length");
  for (const Word& r : relators) {
    check_input(!r.empty(), "empty relator stored");
    check_input(r.max_generator() <= ngens, "relator mentions unknown generator");
  }
}

long long Presentation::total_relator_length() const {
  long long n = 0;
  for (const Word& r : relators) n += (long long)r.size();
  return n;
}

static void emit_word(std::ostringstream& out, const Presentation& p, const Word& w) {
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) out << ' ';
    first = false;
    if (w[i] < 0) out << '-';
    out << p.gen_name(generator_of(w[i]));
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
}

std::string to_text(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (int g = 1; g <= p.ngens; ++g) out << ' ' << p.gen_name(g);
  out << '\n';
  for (const Word& r : p.relators) {
    out << "rel: ";
    emit_word(out, p, r);
    out << '\n';
  }
  return out.str();
}

Presentation presentation_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool saw_gens = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gens:") {
      check_input(!saw_gens, "line " + std::to_string(lineno) + ": duplicate gens line");
      saw_gens = true;
      std::string name;
      while (ls >> name) {
        check_input(name[0] != '-' && name.find('^') == std::string::npos,
                    "line " + std::to_string(lineno) + ": bad generator name '" + name + "'");
        p.names.push_back(name);
      }
      p.ngens = int(p.names.size());
    } else if (head == "rel:") {
      check_input(saw_gens, "line " + std::to_string(lineno) + ": rel before gens");
      Word w;
      std::string tok;
      while (ls >> tok) {
        bool neg = false;
        std::string body = tok;
        if (!body.empty() && body[0] == '-') {
          neg = true;
          body = body.substr(1);
        }
        long long exp = 1;
        auto caret = body.find('^');
        if (caret != std::string::npos) {
          std::string es = body.substr(caret + 1);
          body = body.substr(0, caret);
          check_input(!es.empty() && es.find_first_not_of("0123456789") == std::string::npos,
                      "line " + std::to_string(lineno) + ": bad exponent in '" + tok + "'");
          exp = std::stoll(es);
        }
        int g = p.gen_by_name(body);
        check_input(g > 0, "line " + std::to_string(lineno) + ": unknown generator '" + body + "'");
        w.append(Word::generator_power(g, neg ? -exp : exp));
      }
      p.add_relator(w);
    } else {
      throw ValidationError("line " + std::to_string(lineno) + ": expected 'gens:' or 'rel:'");
    }
  }
  check_input(saw_gens, "missing gens line");
  return p;
}

}  // namespace pqw
