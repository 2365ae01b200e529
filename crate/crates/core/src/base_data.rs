//! Explicit small designs whose listing order is a Hamilton cycle of the 2-BIG.

pub(crate) const TTS4: [[u32; 3]; 4] = [
    [0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3],
];

pub(crate) const TTS7: [[u32; 3]; 14] = [
    [0, 1, 2], [0, 1, 3], [0, 3, 5], [0, 5, 6], [0, 4, 6], [0, 2, 4], [2, 4, 5], [2, 3, 5],
    [2, 3, 6], [3, 4, 6], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
];

pub(crate) const TTS9: [[u32; 3]; 24] = [
    [0, 1, 2], [0, 1, 3], [0, 3, 4], [0, 2, 4], [2, 4, 6], [1, 4, 6], [1, 4, 8], [1, 7, 8],
    [1, 6, 7], [2, 6, 7], [2, 3, 7], [3, 4, 7], [4, 5, 7], [4, 5, 8], [2, 5, 8], [2, 3, 8],
    [3, 6, 8], [0, 6, 8], [0, 7, 8], [0, 5, 7], [0, 5, 6], [3, 5, 6], [1, 3, 5], [1, 2, 5],
];

pub(crate) const TTS10: [[u32; 3]; 30] = [
    [0, 1, 2], [0, 1, 3], [0, 3, 5], [0, 5, 7], [0, 7, 9], [0, 8, 9], [0, 6, 8], [0, 4, 6],
    [4, 6, 9], [4, 5, 9], [1, 4, 5], [1, 3, 4], [3, 4, 7], [3, 7, 9], [3, 6, 9], [2, 3, 6],
    [2, 3, 8], [3, 5, 8], [5, 6, 8], [1, 5, 6], [1, 6, 7], [2, 6, 7], [2, 5, 7], [2, 5, 9],
    [1, 2, 9], [1, 8, 9], [1, 7, 8], [4, 7, 8], [2, 4, 8], [0, 2, 4],
];

pub(crate) const TTS18: [[u32; 3]; 102] = [
    [0, 1, 2], [0, 1, 3], [0, 3, 5], [0, 5, 6], [0, 4, 6], [0, 2, 4], [2, 3, 4], [1, 3, 4],
    [1, 4, 8], [1, 6, 8], [1, 5, 6], [1, 5, 7], [4, 5, 7], [4, 5, 13], [4, 13, 16], [4, 10, 16],
    [2, 10, 16], [2, 10, 13], [9, 10, 13], [1, 9, 13], [1, 9, 12], [1, 10, 12], [1, 10, 14],
    [1, 14, 17], [1, 16, 17], [0, 16, 17], [0, 14, 16], [2, 14, 16], [2, 14, 15], [3, 14, 15],
    [3, 14, 17], [3, 13, 17], [5, 13, 17], [5, 10, 17], [5, 10, 14], [5, 9, 14], [4, 9, 14],
    [4, 6, 14], [6, 13, 14], [8, 13, 14], [8, 11, 14], [7, 11, 14], [7, 12, 14], [0, 12, 14],
    [0, 12, 13], [8, 12, 13], [8, 12, 15], [7, 12, 15], [4, 7, 15], [4, 10, 15], [8, 10, 15],
    [0, 8, 10], [0, 10, 11], [6, 10, 11], [2, 6, 11], [2, 6, 8], [2, 5, 8], [3, 5, 8],
    [3, 7, 8], [0, 7, 8], [0, 7, 9], [0, 9, 11], [4, 9, 11], [4, 11, 12], [4, 12, 17],
    [4, 8, 17], [8, 9, 17], [6, 9, 17], [6, 12, 17], [6, 12, 16], [5, 12, 16], [2, 5, 12],
    [2, 9, 12], [2, 3, 9], [3, 9, 10], [3, 10, 12], [3, 11, 12], [3, 11, 13], [1, 11, 13],
    [1, 11, 15], [1, 15, 16], [3, 15, 16], [3, 6, 16], [3, 6, 7], [6, 7, 10], [7, 10, 17],
    [7, 11, 17], [2, 11, 17], [2, 15, 17], [0, 15, 17], [0, 13, 15], [6, 13, 15], [6, 9, 15],
    [5, 9, 15], [5, 11, 15], [5, 11, 16], [8, 11, 16], [8, 9, 16], [7, 9, 16], [7, 13, 16],
    [2, 7, 13], [1, 2, 7],
];

/// A shortest cycle of the 2-BIG, listed as blocks.
pub(crate) const GIRTH7_CYCLE_TTS10: [[u32; 3]; 7] = [
    [0, 1, 2], [0, 1, 3], [0, 3, 5], [0, 5, 7], [2, 5, 7], [2, 5, 9], [1, 2, 9],
];

/// A shortest cycle of the 2-BIG, listed as blocks.
pub(crate) const GIRTH5_CYCLE_TTS18: [[u32; 3]; 5] = [
    [0, 1, 2], [0, 1, 3], [1, 3, 4], [2, 3, 4], [0, 2, 4],
];

/// Found by the hill climb with the default seed and frozen here.
pub(crate) const TTS13: [[u32; 3]; 52] = [
    [0, 1, 2], [0, 1, 11], [0, 3, 11], [1, 3, 11], [1, 3, 5], [1, 5, 6],
    [1, 6, 9], [1, 7, 9], [1, 7, 12], [1, 4, 12], [1, 4, 8], [4, 8, 12],
    [0, 8, 12], [0, 8, 9], [0, 5, 9], [0, 5, 10], [5, 7, 10], [5, 7, 8],
    [5, 8, 11], [2, 5, 11], [2, 8, 11], [2, 8, 9], [2, 3, 9], [3, 6, 9],
    [3, 6, 8], [3, 7, 8], [3, 7, 12], [3, 5, 12], [5, 9, 12], [9, 10, 12],
    [4, 9, 10], [4, 9, 11], [7, 9, 11], [7, 10, 11], [10, 11, 12], [6, 11, 12],
    [4, 6, 11], [4, 5, 6], [2, 4, 5], [2, 4, 7], [0, 4, 7], [0, 3, 4],
    [3, 4, 10], [2, 3, 10], [1, 2, 10], [1, 8, 10], [6, 8, 10], [0, 6, 10],
    [0, 6, 7], [2, 6, 7], [2, 6, 12], [0, 2, 12],
];
