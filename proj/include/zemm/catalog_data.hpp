#pragma once

// Static data tables for the built-in graph catalog: edge lists with
// prescribed spanning trees (tree flag), expected fundamental-cycle matrices,
// and reference Gram matrices for the graphs that carry one.

namespace zemm::detail {

struct CatalogEdgeSpec {
  int label;  // 1-based published edge label; runtime edge id is label-1
  int tail;
  int head;
  bool tree;
};

inline constexpr CatalogEdgeSpec kEdgesG[] = {
    {1, 0, 1, false},
    {2, 3, 0, false},
    {3, 1, 6, false},
    {4, 3, 8, false},
    {5, 6, 7, false},
    {6, 7, 8, false},
    {7, 8, 5, true},
    {8, 5, 9, true},
    {9, 9, 7, true},
    {10, 5, 6, true},
    {11, 4, 9, true},
    {12, 0, 4, true},
    {13, 4, 2, true},
    {14, 1, 2, true},
    {15, 2, 3, true}};

inline constexpr CatalogEdgeSpec kEdgesF11[] = {
    {1, 0, 1, false},
    {2, 1, 2, false},
    {3, 0, 3, false},
    {4, 6, 7, false},
    {5, 7, 8, false},
    {6, 6, 10, false},
    {7, 10, 8, false},
    {8, 9, 8, true},
    {9, 6, 9, true},
    {10, 11, 10, true},
    {11, 11, 9, true},
    {12, 3, 11, true},
    {13, 3, 2, true},
    {14, 0, 4, true},
    {15, 4, 2, true},
    {16, 4, 5, true},
    {17, 1, 5, true},
    {18, 5, 7, true}};

inline constexpr CatalogEdgeSpec kEdgesF12[] = {
    {1, 7, 1, false},
    {2, 11, 3, false},
    {3, 9, 4, false},
    {4, 10, 0, false},
    {5, 2, 1, false},
    {6, 5, 6, false},
    {7, 11, 8, false},
    {8, 11, 5, true},
    {9, 5, 9, true},
    {10, 9, 8, true},
    {11, 8, 7, true},
    {12, 7, 6, true},
    {13, 6, 10, true},
    {14, 10, 2, true},
    {15, 2, 3, true},
    {16, 3, 4, true},
    {17, 4, 0, true},
    {18, 0, 1, true}};

inline constexpr CatalogEdgeSpec kEdgesF13[] = {
    {1, 0, 1, false},
    {2, 5, 4, false},
    {3, 6, 4, false},
    {4, 2, 7, false},
    {5, 3, 10, false},
    {6, 11, 7, false},
    {7, 11, 10, false},
    {8, 11, 0, true},
    {9, 0, 5, true},
    {10, 5, 9, true},
    {11, 6, 1, true},
    {12, 8, 6, true},
    {13, 1, 2, true},
    {14, 3, 4, true},
    {15, 2, 3, true},
    {16, 8, 7, true},
    {17, 9, 10, true},
    {18, 9, 8, true}};

inline constexpr CatalogEdgeSpec kEdgesF14[] = {
    {1, 6, 8, false},
    {2, 5, 11, false},
    {3, 0, 9, false},
    {4, 4, 3, false},
    {5, 3, 10, false},
    {6, 10, 9, false},
    {7, 0, 5, false},
    {8, 1, 0, true},
    {9, 1, 6, true},
    {10, 6, 4, true},
    {11, 4, 5, true},
    {12, 1, 2, true},
    {13, 2, 3, true},
    {14, 2, 7, true},
    {15, 7, 11, true},
    {16, 11, 10, true},
    {17, 7, 8, true},
    {18, 8, 9, true}};

inline constexpr CatalogEdgeSpec kEdgesG1[] = {
    {1, 0, 3, false},
    {2, 2, 3, false},
    {3, 2, 1, false},
    {4, 1, 7, false},
    {5, 7, 6, false},
    {6, 6, 9, false},
    {7, 9, 8, false},
    {8, 7, 8, true},
    {9, 8, 10, true},
    {10, 6, 10, true},
    {11, 10, 5, true},
    {12, 5, 4, true},
    {13, 4, 0, true},
    {14, 0, 1, true},
    {15, 4, 2, true},
    {16, 3, 11, true},
    {17, 11, 9, true},
    {18, 11, 5, true}};

inline constexpr CatalogEdgeSpec kEdgesG2[] = {
    {1, 0, 11, false},
    {2, 11, 1, false},
    {3, 0, 3, false},
    {4, 3, 9, false},
    {5, 9, 8, false},
    {6, 7, 8, false},
    {7, 1, 7, false},
    {8, 0, 5, true},
    {9, 11, 5, true},
    {10, 5, 4, true},
    {11, 4, 2, true},
    {12, 4, 10, true},
    {13, 1, 2, true},
    {14, 3, 2, true},
    {15, 6, 9, true},
    {16, 6, 7, true},
    {17, 6, 10, true},
    {18, 10, 8, true}};

inline constexpr CatalogEdgeSpec kEdgesG3[] = {
    {1, 0, 5, false},
    {2, 0, 3, false},
    {3, 5, 1, false},
    {4, 3, 9, false},
    {5, 1, 7, false},
    {6, 7, 8, false},
    {7, 9, 8, false},
    {8, 5, 11, true},
    {9, 1, 11, true},
    {10, 11, 2, true},
    {11, 0, 4, true},
    {12, 4, 2, true},
    {13, 4, 10, true},
    {14, 3, 2, true},
    {15, 6, 7, true},
    {16, 6, 10, true},
    {17, 10, 8, true},
    {18, 6, 9, true}};

inline constexpr CatalogEdgeSpec kEdgesG4[] = {
    {1, 0, 1, false},
    {2, 4, 11, false},
    {3, 11, 2, false},
    {4, 4, 10, false},
    {5, 7, 1, false},
    {6, 7, 8, false},
    {7, 10, 8, false},
    {8, 1, 2, true},
    {9, 2, 3, true},
    {10, 3, 5, true},
    {11, 5, 0, true},
    {12, 11, 5, true},
    {13, 0, 4, true},
    {14, 10, 6, true},
    {15, 9, 6, true},
    {16, 3, 9, true},
    {17, 6, 7, true},
    {18, 8, 9, true}};

inline constexpr CatalogEdgeSpec kEdgesG5[] = {
    {1, 1, 7, false},
    {2, 1, 2, false},
    {3, 4, 10, false},
    {4, 6, 7, false},
    {5, 4, 2, false},
    {6, 6, 10, false},
    {7, 11, 5, false},
    {8, 7, 8, true},
    {9, 8, 9, true},
    {10, 9, 3, true},
    {11, 3, 0, true},
    {12, 0, 1, true},
    {13, 2, 5, true},
    {14, 5, 3, true},
    {15, 10, 8, true},
    {16, 0, 4, true},
    {17, 9, 11, true},
    {18, 11, 6, true}};

inline constexpr CatalogEdgeSpec kEdgesG6[] = {
    {1, 1, 7, false},
    {2, 5, 11, false},
    {3, 3, 9, false},
    {4, 2, 1, false},
    {5, 3, 5, false},
    {6, 7, 11, false},
    {7, 6, 9, false},
    {8, 4, 10, true},
    {9, 1, 0, true},
    {10, 0, 3, true},
    {11, 5, 2, true},
    {12, 0, 4, true},
    {13, 4, 2, true},
    {14, 8, 7, true},
    {15, 11, 6, true},
    {16, 9, 8, true},
    {17, 6, 10, true},
    {18, 10, 8, true}};

inline constexpr CatalogEdgeSpec kEdgesG7[] = {
    {1, 1, 7, false},
    {2, 3, 11, false},
    {3, 5, 11, false},
    {4, 1, 0, false},
    {5, 5, 3, false},
    {6, 7, 6, false},
    {7, 6, 9, false},
    {8, 4, 10, true},
    {9, 11, 9, true},
    {10, 0, 4, true},
    {11, 0, 5, true},
    {12, 4, 2, true},
    {13, 3, 2, true},
    {14, 6, 10, true},
    {15, 10, 8, true},
    {16, 9, 8, true},
    {17, 8, 7, true},
    {18, 2, 1, true}};

inline constexpr CatalogEdgeSpec kEdgesG8[] = {
    {1, 0, 3, false},
    {2, 0, 4, false},
    {3, 3, 11, false},
    {4, 11, 9, false},
    {5, 4, 10, false},
    {6, 10, 8, false},
    {7, 9, 8, false},
    {8, 0, 5, true},
    {9, 5, 11, true},
    {10, 5, 1, true},
    {11, 1, 7, true},
    {12, 4, 2, true},
    {13, 1, 2, true},
    {14, 3, 2, true},
    {15, 6, 9, true},
    {16, 6, 10, true},
    {17, 6, 7, true},
    {18, 7, 8, true}};

inline constexpr CatalogEdgeSpec kEdgesG9[] = {
    {1, 3, 0, false},
    {2, 0, 1, false},
    {3, 5, 11, false},
    {4, 4, 10, false},
    {5, 3, 9, false},
    {6, 9, 6, false},
    {7, 6, 7, false},
    {8, 0, 4, true},
    {9, 4, 2, true},
    {10, 2, 3, true},
    {11, 1, 2, true},
    {12, 1, 5, true},
    {13, 5, 11, true},
    {14, 11, 7, true},
    {15, 7, 8, true},
    {16, 10, 8, true},
    {17, 6, 10, true},
    {18, 8, 9, true}};

inline constexpr CatalogEdgeSpec kEdgesG10[] = {
    {1, 3, 0, false},
    {2, 0, 4, false},
    {3, 5, 11, false},
    {4, 4, 10, false},
    {5, 3, 9, false},
    {6, 9, 6, false},
    {7, 6, 10, false},
    {8, 10, 8, true},
    {9, 8, 9, true},
    {10, 6, 7, true},
    {11, 7, 8, true},
    {12, 1, 7, true},
    {13, 0, 5, true},
    {14, 5, 11, true},
    {15, 11, 1, true},
    {16, 1, 2, true},
    {17, 2, 3, true},
    {18, 4, 2, true}};

inline constexpr CatalogEdgeSpec kEdgesE42[] = {
    {1, 0, 1, false},
    {2, 1, 2, false},
    {3, 2, 3, false},
    {4, 3, 0, false},
    {5, 6, 7, false},
    {6, 7, 8, false},
    {7, 8, 9, false},
    {8, 9, 6, false},
    {9, 0, 4, false},
    {10, 4, 2, false},
    {11, 6, 10, false},
    {12, 10, 8, false},
    {13, 1, 5, false},
    {14, 4, 5, false},
    {15, 3, 5, false},
    {16, 7, 11, false},
    {17, 10, 11, false},
    {18, 9, 11, false}};

inline constexpr int kCycleG[6][15] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
    {0, 0, 1, 0, 0, 0, 0, 1, 0, -1, -1, 0, 1, -1, 0},
    {0, 0, 0, 1, 0, 0, 1, 1, 0, 0, -1, 0, 1, 0, 1},
    {0, 0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0}};

inline constexpr int kCycleBlockF11[7][11] = {
    {0, 0, 0, 0, 0, 0, -1, 0, -1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0},
    {0, 0, 0, 0, 0, 1, -1, -1, 0, 0, 0},
    {0, -1, 0, 1, 1, -1, 0, 1, -1, 0, -1},
    {-1, 0, 0, -1, -1, 1, 0, -1, 1, 0, 1},
    {0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0}};

inline constexpr int kCycleBlockF12[7][11] = {
    {0, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1},
    {-1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0},
    {0, 0, -1, -1, -1, -1, -1, -1, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, -1, -1, -1, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1},
    {0, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0},
    {-1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0}};

inline constexpr int kCycleBlockF13[7][11] = {
    {0, -1, -1, -1, -1, 0, 0, 0, 0, 0, -1},
    {0, 0, -1, -1, -1, -1, -1, -1, 0, 0, -1},
    {0, 0, 0, -1, 0, -1, -1, -1, 0, 0, 0},
    {0, 0, 0, 1, 1, 1, 0, 0, -1, 0, 0},
    {0, 0, 0, 1, 1, 1, 0, 1, 0, -1, 1},
    {-1, -1, -1, 0, 0, 0, 0, 0, -1, 0, -1},
    {-1, -1, -1, 0, 0, 0, 0, 0, 0, -1, 0}};

inline constexpr int kCycleBlockF14[7][11] = {
    {0, 1, 0, 0, -1, 0, -1, 0, 0, -1, 0},
    {0, 1, 1, 1, -1, 0, -1, -1, 0, 0, 0},
    {1, 0, 0, 0, -1, 0, -1, 0, 0, -1, -1},
    {0, 1, 1, 0, -1, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, -1, -1, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1},
    {1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0}};

inline constexpr int kCycleBlockG1[7][11] = {
    {0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1},
    {0, 0, 0, 0, 0, -1, -1, 1, 0, 0, 0},
    {1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0},
    {-1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -1, -1, 0, 0, 0, 0, 0, -1, 1},
    {0, 1, 0, 1, 0, 0, 0, 0, 0, 1, -1}};

inline constexpr int kCycleBlockG2[7][11] = {
    {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, -1, -1, 0, 1, 0, 0, 0, 0, 0},
    {-1, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, -1, 0, -1, -1, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1},
    {0, 0, 0, 1, -1, -1, 0, 0, -1, 1, 0}};

inline constexpr int kCycleBlockG3[7][11] = {
    {1, 0, 1, -1, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, -1, -1, 0, 1, 0, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, -1, -1, 0, 1, 0, -1},
    {0, -1, -1, 0, 1, -1, 0, -1, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1}};

inline constexpr int kCycleBlockG4[7][11] = {
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, 0, 1, 1, -1, -1, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1}};

inline constexpr int kCycleBlockG5[7][11] = {
    {1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1},
    {0, 0, -1, 0, 0, 0, 1, 0, 0, 1, 0}};

inline constexpr int kCycleBlockG6[7][11] = {
    {-1, -1, 0, 0, -1, 0, -1, 0, 0, 0, -1},
    {-1, 0, 0, -1, 0, 1, 0, 1, 0, 1, 0},
    {-1, 0, 1, 0, -1, 0, 0, 0, 1, 0, -1},
    {0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, -1, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1}};

inline constexpr int kCycleBlockG7[7][11] = {
    {-1, 0, 0, 0, 1, 0, 0, -1, 0, -1, 1},
    {-1, 1, 0, 0, 1, -1, 0, -1, 1, 0, 0},
    {-1, 1, -1, 1, 0, 0, 0, -1, 1, 0, 0},
    {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1},
    {0, 0, -1, 1, -1, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, -1, -1, 1, 0, 0}};

inline constexpr int kCycleBlockG8[7][11] = {
    {-1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0},
    {-1, 0, -1, 0, 1, -1, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0},
    {0, 1, -1, -1, 0, 0, 0, -1, 0, 1, 0},
    {0, 0, 0, -1, -1, 1, 0, 0, -1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1}};

inline constexpr int kCycleBlockG9[7][11] = {
    {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {0, -1, 0, 1, -1, -1, -1, -1, 1, 0, 0},
    {0, 0, 1, 1, -1, -1, -1, -1, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0}};

inline constexpr int kCycleBlockG10[7][11] = {
    {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0},
    {0, 0, 0, 0, 0, -1, -1, -1, -1, 0, 1},
    {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
    {1, 0, 0, -1, -1, 0, 0, 0, 1, 0, -1},
    {0, -1, 0, -1, -1, 0, 0, 0, 1, 1, 0},
    {0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0}};

inline constexpr int kGramG[6][6] = {
    {2, 1, 1, 0, 0, 0},
    {1, 2, 1, -1, 0, 0},
    {1, 1, 2, -1, 1, 1},
    {0, -1, -1, 2, 0, -1},
    {0, 0, 1, 0, 2, 1},
    {0, 0, 1, -1, 1, 2}};

inline constexpr int kGramF11[7][7] = {
    {2, 1, -1, 0, 0, -1, -1},
    {1, 2, 0, 1, 0, -1, 0},
    {-1, 0, 2, 1, 0, 0, 1},
    {0, 1, 1, 2, 1, -1, 0},
    {0, 0, 0, 1, 2, -1, -1},
    {-1, -1, 0, -1, -1, 2, 1},
    {-1, 0, 1, 0, -1, 1, 2}};

inline constexpr int kGramF12[7][7] = {
    {2, 0, -1, 0, -1, 0, 0},
    {0, 2, -1, -1, 1, 0, -1},
    {-1, -1, 2, 0, 0, -1, 1},
    {0, -1, 0, 2, -1, 0, 0},
    {-1, 1, 0, -1, 2, 0, 0},
    {0, 0, -1, 0, 0, 2, -1},
    {0, -1, 1, 0, 0, -1, 2}};

inline constexpr int kGramF13[7][7] = {
    {2, 0, 0, 0, 1, 0, -1},
    {0, 2, -1, 0, 1, -1, 0},
    {0, -1, 2, 0, 0, 0, 0},
    {0, 0, 0, 2, -1, -1, 1},
    {1, 1, 0, -1, 2, 0, -1},
    {0, -1, 0, -1, 0, 2, -1},
    {-1, 0, 0, 1, -1, -1, 2}};

inline constexpr int kGramF14[7][7] = {
    {2, -1, -1, 0, 0, 0, 0},
    {-1, 2, 0, -1, -1, 0, 1},
    {-1, 0, 2, 0, 0, -1, -1},
    {0, -1, 0, 2, 1, 0, 0},
    {0, -1, 0, 1, 2, 1, -1},
    {0, 0, -1, 0, 1, 2, 0},
    {0, 1, -1, 0, -1, 0, 2}};

inline constexpr int kGramG1[7][7] = {
    {2, -1, 1, 0, 1, 1, 1},
    {-1, 2, -1, -1, -1, -1, 0},
    {1, -1, 2, 1, 1, 1, 0},
    {0, -1, 1, 2, 1, 0, -1},
    {1, -1, 1, 1, 2, 1, 0},
    {1, -1, 1, 0, 1, 2, 1},
    {1, 0, 0, -1, 0, 1, 2}};

inline constexpr int kGramG2[7][7] = {
    {2, 1, -1, 0, 0, 0, 0},
    {1, 2, -1, -1, 0, 0, 1},
    {-1, -1, 2, 1, 0, 0, 0},
    {0, -1, 1, 2, 1, -1, -1},
    {0, 0, 0, 1, 2, -1, 0},
    {0, 0, 0, -1, -1, 2, 1},
    {0, 1, 0, -1, 0, 1, 2}};

inline constexpr int kGramG3[7][7] = {
    {2, -1, 1, -1, 1, 0, 0},
    {-1, 2, 0, 1, 0, 0, 0},
    {1, 0, 2, 0, 1, 0, 0},
    {-1, 1, 0, 2, -1, -1, 1},
    {1, 0, 1, -1, 2, 1, 0},
    {0, 0, 0, -1, 1, 2, -1},
    {0, 0, 0, 1, 0, -1, 2}};

inline constexpr int kGramG4[7][7] = {
    {2, 0, 0, -1, -1, 0, -1},
    {0, 2, 1, -1, -1, 0, 0},
    {0, 1, 2, -1, -1, 0, 0},
    {-1, -1, -1, 2, 1, 0, 1},
    {-1, -1, -1, 1, 2, -1, 1},
    {0, 0, 0, 0, -1, 2, -1},
    {-1, 0, 0, 1, 1, -1, 2}};

inline constexpr int kGramG5[7][7] = {
    {2, -1, 0, -1, 0, 0, 1},
    {-1, 2, 0, 0, -1, 0, 0},
    {0, 0, 2, 0, -1, -1, 1},
    {-1, 0, 0, 2, 0, -1, 0},
    {0, -1, -1, 0, 2, 1, -1},
    {0, 0, -1, -1, 1, 2, -1},
    {1, 0, 1, 0, -1, -1, 2}};

inline constexpr int kGramG6[7][7] = {
    {2, -1, -1, 1, 0, 1, 0},
    {-1, 2, 0, -1, 1, -1, 0},
    {-1, 0, 2, 0, -1, -1, -1},
    {1, -1, 0, 2, 0, 0, -1},
    {0, 1, -1, 0, 2, 0, 0},
    {1, -1, -1, 0, 0, 2, 1},
    {0, 0, -1, -1, 0, 1, 2}};

inline constexpr int kGramG7[7][7] = {
    {2, -1, 0, -1, -1, 1, 0},
    {-1, 2, -1, 0, 1, -1, -1},
    {0, -1, 2, 0, -1, 0, 0},
    {-1, 0, 0, 2, 1, -1, 0},
    {-1, 1, -1, 1, 2, -1, 0},
    {1, -1, 0, -1, -1, 2, 1},
    {0, -1, 0, 0, 0, 1, 2}};

inline constexpr int kGramG8[7][7] = {
    {2, -1, 1, 0, 0, 0, 0},
    {-1, 2, 0, 0, 1, 0, 0},
    {1, 0, 2, 1, 0, 0, 0},
    {0, 0, 1, 2, -1, -1, 1},
    {0, 1, 0, -1, 2, 1, 0},
    {0, 0, 0, -1, 1, 2, -1},
    {0, 0, 0, 1, 0, -1, 2}};

inline constexpr int kGramG9[7][7] = {
    {2, 1, 0, 1, -1, 0, 0},
    {1, 2, 1, 0, -1, 0, 0},
    {0, 1, 2, -1, 0, 1, 0},
    {1, 0, -1, 2, -1, -1, 0},
    {-1, -1, 0, -1, 2, 1, 1},
    {0, 0, 1, -1, 1, 2, 1},
    {0, 0, 0, 0, 1, 1, 2}};

inline constexpr int kGramG10[7][7] = {
    {2, 1, 1, 1, -1, 0, 0},
    {1, 2, 0, 1, 0, 0, 0},
    {1, 0, 2, 0, 0, 0, 0},
    {1, 1, 0, 2, -1, 0, -1},
    {-1, 0, 0, -1, 2, 1, 1},
    {0, 0, 0, 0, 1, 2, 1},
    {0, 0, 0, -1, 1, 1, 2}};

}  // namespace zemm::detail
