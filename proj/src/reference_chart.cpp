#include "draftval/reference_chart.hpp"

namespace draftval {

const ValueChart& reference_chart() {
    // Picks 1..210, ten per row.
    static const ValueChart chart(std::array<int, ValueChart::kSize>{
        1000,  932,  862,  801,  743,  691,  645,  606,  567,  546,
         523,  502,  482,  462,  446,  431,  420,  410,  401,  391,
         381,  371,  357,  341,  325,  311,  296,  276,  257,  238,
         221,  210,  200,  191,  186,  180,  176,  172,  171,  171,
         170,  169,  168,  168,  167,  166,  165,  165,  164,  163,
         162,  162,  161,  159,  155,  152,  151,  151,  150,  150,
         150,  148,  144,  140,  135,  128,  127,  126,  126,  125,
         124,  123,  122,  121,  119,  118,  117,  116,  115,  113,
         111,  110,  109,  107,  107,  105,  104,  103,  101,  100,
          98,   96,   95,   94,   93,   92,   92,   91,   91,   91,
          89,   81,   73,   67,   67,   66,   66,   65,   65,   65,
          65,   65,   65,   65,   65,   65,   65,   64,   64,   64,
          63,   63,   63,   63,   62,   62,   62,   62,   62,   62,
          62,   62,   62,   62,   62,   61,   61,   61,   61,   61,
          61,   61,   61,   60,   60,   60,   59,   59,   58,   58,
          58,   57,   57,   57,   56,   56,   56,   56,   55,   55,
          54,   54,   54,   53,   53,   53,   53,   52,   51,   50,
          49,   48,   47,   46,   45,   45,   44,   44,   43,   43,
          42,   42,   41,   41,   40,   39,   38,   38,   37,   36,
          35,   35,   34,   34,   34,   33,   33,   33,   32,   32,
          31,   31,   30,   30,   30,   29,   28,   27,   26,   25,
    });
    return chart;
}

} // namespace draftval
