#include "drg/corpus.hpp"

namespace drg::corpus {

// 32 vertices, 5-regular, 80 edges; validated on load against the
// declared array {5,4,1,1;1,1,4,5}.
const char* const kWellsEdgeList =
    "0 3\n"
    "0 5\n"
    "0 9\n"
    "0 17\n"
    "0 30\n"
    "1 2\n"
    "1 4\n"
    "1 8\n"
    "1 16\n"
    "1 31\n"
    "2 7\n"
    "2 11\n"
    "2 19\n"
    "2 28\n"
    "3 6\n"
    "3 10\n"
    "3 18\n"
    "3 29\n"
    "4 6\n"
    "4 13\n"
    "4 20\n"
    "4 26\n"
    "5 7\n"
    "5 12\n"
    "5 21\n"
    "5 27\n"
    "6 15\n"
    "6 22\n"
    "6 24\n"
    "7 14\n"
    "7 23\n"
    "7 25\n"
    "8 10\n"
    "8 12\n"
    "8 22\n"
    "8 25\n"
    "9 11\n"
    "9 13\n"
    "9 23\n"
    "9 24\n"
    "10 14\n"
    "10 20\n"
    "10 27\n"
    "11 15\n"
    "11 21\n"
    "11 26\n"
    "12 15\n"
    "12 18\n"
    "12 28\n"
    "13 14\n"
    "13 19\n"
    "13 29\n"
    "14 16\n"
    "14 30\n"
    "15 17\n"
    "15 31\n"
    "16 18\n"
    "16 21\n"
    "16 24\n"
    "17 19\n"
    "17 20\n"
    "17 25\n"
    "18 23\n"
    "18 26\n"
    "19 22\n"
    "19 27\n"
    "20 23\n"
    "20 28\n"
    "21 22\n"
    "21 29\n"
    "22 30\n"
    "23 31\n"
    "24 27\n"
    "24 28\n"
    "25 26\n"
    "25 29\n"
    "26 30\n"
    "27 31\n"
    "28 30\n"
    "29 31\n";

}  // namespace drg::corpus
