/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_duel_free: (a: number, b: number) => void;
export const catalog: () => [number, number, number, number];
export const chromatic: (a: number, b: number) => [number, number, number, number];
export const duel_hint: (a: number) => [number, number, number, number];
export const duel_new: (a: number, b: number, c: number) => [number, number, number];
export const duel_reveal: (a: number, b: number, c: number) => [number, number, number, number];
export const duel_state: (a: number) => [number, number, number, number];
export const exchange: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
