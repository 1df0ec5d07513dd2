#include "bs5/fixture_tables.hpp"

#include <stdexcept>

namespace bs5::fixtures {

namespace {

struct Entry {
    int i, j;
    const char* v;
};

const Entry kT1[] = {{1, 0, "1"}, {2, 0, "-1"}, {3, 0, "1/3"}};

const Entry kT2[] = {
    {1, 1, "1"},      {1, 2, "-3/2"},  {1, 3, "1"},    {1, 4, "-1/4"},
    {2, 0, "3"},      {2, 1, "-1/2"},  {2, 2, "3/4"},  {2, 3, "-1/2"},
    {2, 4, "1/8"},    {3, 0, "-19/3"}, {4, 0, "11/2"}, {5, 0, "-9/4"},
    {6, 0, "3/8"},
};

const Entry kT3[] = {
    {1, 1, "1/5"},      {1, 2, "29/10"},    {1, 3, "-25/3"},  {1, 4, "121/12"},
    {1, 5, "-32/5"},    {1, 6, "32/15"},    {1, 7, "-32/105"},
    {2, 0, "2/5"},      {2, 1, "9/10"},     {2, 2, "-59/20"}, {2, 3, "31/6"},
    {2, 4, "-127/24"},  {2, 5, "16/5"},     {2, 6, "-16/15"}, {2, 7, "16/105"},
    {3, 0, "38/5"},     {3, 1, "-5/3"},     {3, 2, "5/2"},    {3, 3, "-5/3"},
    {3, 4, "5/12"},     {4, 0, "-523/20"},  {4, 1, "1"},      {4, 2, "-3/2"},
    {4, 3, "1"},        {4, 4, "-1/4"},     {5, 0, "75/2"},   {5, 1, "-1/5"},
    {5, 2, "3/10"},     {5, 3, "-1/5"},     {5, 4, "1/20"},   {6, 0, "-3551/120"},
    {7, 0, "477/35"},   {8, 0, "-487/140"}, {9, 0, "487/1260"},
};

const Entry kT4[] = {
    {1, 1, "1/5"},        {1, 2, "1/2"},          {1, 3, "7"},
    {1, 4, "-1879/60"},   {1, 5, "8507/150"},     {1, 6, "-10421/180"},
    {1, 7, "4589/126"},   {1, 8, "-227/16"},      {1, 9, "143/45"},
    {1, 10, "-143/450"},  {2, 0, "2/5"},          {2, 1, "1/10"},
    {2, 2, "53/20"},      {2, 3, "-71/6"},        {2, 4, "3089/120"},
    {2, 5, "-10427/300"}, {2, 6, "11189/360"},    {2, 7, "-23329/1260"},
    {2, 8, "227/32"},     {2, 9, "-143/90"},      {2, 10, "143/900"},
    {3, 0, "1"},          {3, 1, "2/3"},          {3, 2, "-19/3"},
    {3, 3, "134/9"},      {3, 4, "-307/18"},      {3, 5, "32/3"},
    {3, 6, "-32/9"},      {3, 7, "32/63"},        {4, 0, "1019/60"},
    {4, 1, "-51/20"},     {4, 2, "281/40"},       {4, 3, "-133/12"},
    {4, 4, "517/48"},     {4, 5, "-32/5"},        {4, 6, "32/15"},
    {4, 7, "-32/105"},    {5, 0, "-2591/30"},     {5, 1, "311/100"},
    {5, 2, "-1061/200"},  {5, 3, "289/60"},       {5, 4, "-673/240"},
    {5, 5, "32/25"},      {5, 6, "-32/75"},       {5, 7, "32/525"},
    {6, 0, "39877/225"},  {6, 1, "-223/120"},     {6, 2, "223/80"},
    {6, 3, "-223/120"},   {6, 4, "223/480"},      {7, 0, "-438271/2100"},
    {7, 1, "17/30"},      {7, 2, "-17/20"},       {7, 3, "17/30"},
    {7, 4, "-17/120"},    {8, 0, "15035/96"},     {8, 1, "-17/240"},
    {8, 2, "17/160"},     {8, 3, "-17/240"},      {8, 4, "17/960"},
    {9, 0, "-55459/720"}, {10, 0, "1224179/50400"}, {11, 0, "-113287/25200"},
    {12, 0, "113287/302400"},
};

const Entry kT5[] = {
    {1, 1, "1/5"},            {1, 2, "1/2"},           {1, 3, "3/5"},
    {1, 4, "319/20"},         {1, 5, "-4889/50"},      {1, 6, "71923/300"},
    {1, 7, "-357143/1050"},   {1, 8, "879181/2800"},   {1, 9, "-62029/315"},
    {1, 10, "53009/630"},     {1, 11, "-12424/525"},   {1, 12, "896/225"},
    {1, 13, "-896/2925"},     {2, 0, "2/5"},           {2, 1, "1/10"},
    {2, 2, "1/4"},            {2, 3, "67/10"},         {2, 4, "-943/24"},
    {2, 5, "31681/300"},      {2, 6, "-319979/1800"},  {2, 7, "1300879/6300"},
    {2, 8, "-958631/5600"},   {2, 9, "64031/630"},     {2, 10, "-267047/6300"},
    {2, 11, "6212/525"},      {2, 12, "-448/225"},     {2, 13, "448/2925"},
    {3, 0, "1"},              {3, 1, "-2/15"},         {3, 2, "31/15"},
    {3, 3, "-20"},            {3, 4, "1121/18"},       {3, 5, "-9083/90"},
    {3, 6, "53257/540"},      {3, 7, "-115301/1890"},  {3, 8, "1135/48"},
    {3, 9, "-143/27"},        {3, 10, "143/270"},      {4, 0, "47/60"},
    {4, 1, "13/20"},          {4, 2, "-359/40"},       {4, 3, "371/12"},
    {4, 4, "-14231/240"},     {4, 5, "11147/150"},     {4, 6, "-11477/180"},
    {4, 7, "23473/630"},      {4, 8, "-227/16"},       {4, 9, "143/45"},
    {4, 10, "-143/450"},      {5, 0, "5651/150"},      {5, 1, "-321/100"},
    {5, 2, "2947/200"},       {5, 3, "-629/20"},       {5, 4, "46771/1200"},
    {5, 5, "-23627/750"},     {5, 6, "16469/900"},     {5, 7, "-25969/3150"},
    {5, 8, "227/80"},         {5, 9, "-143/225"},      {5, 10, "143/2250"},
    {6, 0, "-37733/150"},     {6, 1, "1199/200"},      {6, 2, "-17927/1200"},
    {6, 3, "7867/360"},       {6, 4, "-5855/288"},     {6, 5, "892/75"},
    {6, 6, "-892/225"},       {6, 7, "892/1575"},      {7, 0, "214099/315"},
    {7, 1, "-12527/2100"},    {7, 2, "45197/4200"},    {7, 3, "-13609/1260"},
    {7, 4, "36457/5040"},     {7, 5, "-272/75"},       {7, 6, "272/225"},
    {7, 7, "-272/1575"},      {8, 0, "-2253961/2100"}, {8, 1, "9967/2800"},
    {8, 2, "-93511/16800"},   {8, 3, "20987/5040"},    {8, 4, "-32411/20160"},
    {8, 5, "34/75"},          {8, 6, "-34/225"},       {8, 7, "34/1575"},
    {9, 0, "33882311/30240"}, {9, 1, "-1957/1512"},    {9, 2, "1957/1008"},
    {9, 3, "-1957/1512"},     {9, 4, "1957/6048"},     {10, 0, "-20505517/25200"},
    {10, 1, "289/1080"},      {10, 2, "-289/720"},     {10, 3, "289/1080"},
    {10, 4, "-289/4320"},     {11, 0, "694474463/1663200"}, {11, 1, "-289/11880"},
    {11, 2, "289/7920"},      {11, 3, "-289/11880"},   {11, 4, "289/47520"},
    {12, 0, "-497946013/3326400"}, {13, 0, "55461661/1544400"},
    {14, 0, "-6257393/1201200"},   {15, 0, "6257393/18018000"},
};

CoeffTable build(int k, const Entry* first, const Entry* last) {
    CoeffTable t(k);
    for (const Entry* e = first; e != last; ++e)
        t.set(e->i, e->j, parse_rational(e->v));
    return t;
}

}  // namespace

CoeffTable table_k(int k) {
    switch (k) {
        case 1: return build(1, std::begin(kT1), std::end(kT1));
        case 2: return build(2, std::begin(kT2), std::end(kT2));
        case 3: return build(3, std::begin(kT3), std::end(kT3));
        case 4: return build(4, std::begin(kT4), std::end(kT4));
        case 5: return build(5, std::begin(kT5), std::end(kT5));
        default: throw std::invalid_argument("fixture tables cover k = 1..5 only");
    }
}

}  // namespace bs5::fixtures
