#include "lamrep/endo.hpp"

namespace lamrep {

std::vector<QuiverWord> composable_words(int max_len) {
    std::vector<QuiverWord> words;
    for (int i = 1; i <= max_len; ++i) words.push_back({i, 0, 0});
    for (int j = 1; j <= max_len; ++j) words.push_back({0, 0, j});
    for (int i = 0; i <= max_len - 1; ++i)
        for (int j = 0; i + j + 1 <= max_len; ++j) words.push_back({i, 1, j});
    return words;
}

}  // namespace lamrep
