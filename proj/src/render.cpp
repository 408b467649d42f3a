#include "weakgen/render.hpp"

#include <algorithm>
#include <sstream>

namespace weakgen {

  namespace {
    struct Labels {
      std::vector<std::string> text;    // per letter
      std::vector<std::string> legend;  // "[k] = term"
    };

    Labels make_labels(GenStore const& store, Landscape const& u) {
      Labels                   out;
      std::vector<GenId>       long_ids;
      for (GenId g : u.letters) {
        std::string s = serialize(store, g);
        if (s.size() <= kMaxLabel) {
          out.text.push_back(std::move(s));
          continue;
        }
        auto it = std::find(long_ids.begin(), long_ids.end(), g);
        std::size_t k = it - long_ids.begin();
        if (it == long_ids.end()) {
          long_ids.push_back(g);
          out.legend.push_back("[" + std::to_string(k) + "] = " + s);
        }
        out.text.push_back("[" + std::to_string(k) + "]");
      }
      return out;
    }

    std::string escape(std::string_view s) {
      std::string out;
      for (char c : s) {
        switch (c) {
          case '&': out += "&amp;"; break;
          case '<': out += "&lt;"; break;
          case '>': out += "&gt;"; break;
          case '"': out += "&quot;"; break;
          default: out += c;
        }
      }
      return out;
    }
  }  // namespace

  std::string render_ascii(GenStore const& store, Landscape const& u) {
    unsigned const top    = height(store, u);
    Labels const   labels = make_labels(store, u);
    std::vector<std::string> rows(top + 1);

    auto put = [&](unsigned h, std::size_t col, std::string const& s) {
      std::string& row = rows[h];
      row.resize(std::max(row.size(), col + s.size()), ' ');
      row.replace(col, s.size(), s);
    };

    std::size_t col = 0;
    for (std::size_t i = 0; i < u.letters.size(); ++i) {
      if (i > 0) {
        unsigned h = std::min(store.height(u.letters[i - 1]),
                              store.height(u.letters[i]));
        std::string a = serialize(store, u.anchors[i - 1]);
        put(h, col, a);
        col += a.size() + 1;
      }
      put(store.height(u.letters[i]), col, labels.text[i]);
      col += labels.text[i].size() + 1;
    }

    std::size_t const width = std::to_string(top).size();
    std::string out;
    for (unsigned h = top + 1; h-- > 0;) {
      std::string n    = std::to_string(h);
      std::string line = std::string(width - n.size(), ' ') + n + " | " + rows[h];
      line.erase(line.find_last_not_of(' ') + 1);
      out += line + '\n';
    }
    for (auto const& l : labels.legend) {
      out += l + '\n';
    }
    return out;
  }

  std::string render_svg(GenStore const& store, Landscape const& u) {
    constexpr int  grid   = 40;
    unsigned const top    = height(store, u);
    Labels const   labels = make_labels(store, u);
    std::size_t const n   = u.letters.size();
    int const width  = int(2 * n) * grid;
    int const height = int(top + 2) * grid
                       + int(labels.legend.size()) * grid / 2;

    auto x = [&](std::size_t i) { return grid + int(2 * i) * grid; };
    auto y = [&](GenId g) { return int(top - store.height(g) + 1) * grid; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
       << ' ' << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
    for (std::size_t i = 0; i + 1 < n; ++i) {
      int x1 = x(i), y1 = y(u.letters[i]), x2 = x(i + 1),
          y2 = y(u.letters[i + 1]);
      os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" stroke=\"black\"/>\n";
      os << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 + 4
         << "\" text-anchor=\"middle\" fill=\"#555\">"
         << escape(serialize(store, u.anchors[i])) << "</text>\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
      os << "  <g>\n    <title>" << escape(serialize(store, u.letters[i]))
         << "</title>\n    <circle cx=\"" << x(i) << "\" cy=\"" << y(u.letters[i])
         << "\" r=\"4\"/>\n    <text x=\"" << x(i) << "\" y=\""
         << y(u.letters[i]) - 8 << "\" text-anchor=\"middle\">"
         << escape(labels.text[i]) << "</text>\n  </g>\n";
    }
    int ly = int(top + 2) * grid;
    for (auto const& l : labels.legend) {
      os << "  <text x=\"" << grid / 2 << "\" y=\"" << ly << "\">" << escape(l)
         << "</text>\n";
      ly += grid / 2;
    }
    os << "</svg>\n";
    return os.str();
  }

  nlohmann::json render_json(GenStore const& store, Landscape const& u) {
    Labels const   labels   = make_labels(store, u);
    nlohmann::json vertices = nlohmann::json::array();
    nlohmann::json edges    = nlohmann::json::array();
    for (std::size_t i = 0; i < u.letters.size(); ++i) {
      vertices.push_back({{"index", i},
                          {"term", serialize(store, u.letters[i])},
                          {"label", labels.text[i]},
                          {"height", store.height(u.letters[i])}});
      if (i > 0) {
        edges.push_back({{"from", i - 1},
                         {"to", i},
                         {"anchor", serialize(store, u.anchors[i - 1])}});
      }
    }
    return {{"landscape", to_json(store, u)},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
  }

}  // namespace weakgen
