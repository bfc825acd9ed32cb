const ENGINE_MODULE_BYTES = new Uint8Array([34,117,115,101,32,115,116,114,105,99,116,34,59,10,47,42,42,10,32,42,32,83,101,108,102,45,99,111,110,116,97,105,110,101,100,32,101,110,103,105,110,101,32,109,111,100,117,108,101,32,102,111,114,32,116,104,101,32,114,101,110,100,101,114,32,115,99,111,112,101,58,32,111,114,99,104,101,115,116,114,97,32,108,97,110,103,117,97,103,101,44,10,32,42,32,115,99,111,114,101,32,112,97,114,115,105,110,103,44,32,98,108,111,99,107,32,101,110,103,105,110,101,44,32,97,110,100,32,116,104,101,32,112,114,111,99,101,115,115,111,114,32,99,111,114,101,32,40,99,110,116,32,97,117,116,111,109,97,116,111,110,32,43,10,32,42,32,109,101,115,115,97,103,101,32,104,97,110,100,108,105,110,103,32,111,118,101,114,32,116,104,101,32,119,105,114,101,32,115,99,104,101,109,97,41,46,10,32,42,10,32,42,32,78,111,32,105,109,112,111,114,116,115,47,101,120,112,111,114,116,115,58,32,116,104,101,32,99,111,109,112,105,108,101,100,32,111,117,116,112,117,116,32,105,115,32,97,32,112,108,97,105,110,32,115,99,114,105,112,116,32,115,111,32,105,116,32,99,97,110,32,98,101,10,32,42,32,105,110,115,116,97,110,116,105,97,116,101,100,32,115,121,110,99,104,114,111,110,111,117,115,108,121,32,102,114,111,109,32,112,97,99,107,97,103,101,100,32,98,121,116,101,115,32,105,110,115,105,100,101,32,116,104,101,32,97,117,100,105,111,32,114,101,110,100,101,114,10,32,42,32,115,99,111,112,101,32,40,119,104,105,99,104,32,104,97,115,32,110,111,32,108,111,97,100,105,110,103,32,102,97,99,105,108,105,116,105,101,115,41,46,32,84,104,101,32,109,111,100,117,108,101,32,114,101,103,105,115,116,101,114,115,32,105,116,115,101,108,102,32,97,115,10,32,42,32,103,108,111,98,97,108,84,104,105,115,46,95,95,98,108,111,99,107,115,121,110,116,104,69,110,103,105,110,101,77,111,100,117,108,101,46,10,32,42,47,10,40,40,41,32,61,62,32,123,10,32,32,32,32,105,102,32,40,103,108,111,98,97,108,84,104,105,115,46,95,95,98,108,111,99,107,115,121,110,116,104,69,110,103,105,110,101,77,111,100,117,108,101,41,10,32,32,32,32,32,32,32,32,114,101,116,117,114,110,59,10,32,32,32,32,99,111,110,115,116,32,84,87,79,95,80,73,32,61,32,50,32,42,32,77,97,116,104,46,80,73,59,10,32,32,32,32,99,111,110,115,116,32,70,82,65,77,69,95,69,80,83,32,61,32,49,101,45,57,59,10,32,32,32,32,99,111,110,115,116,32,100,105,97,103,32,61,32,40,108,105,110,101,44,32,99,111,108,117,109,110,44,32,109,101,115,115,97,103,101,41,32,61,62,32,40,123,32,108,105,110,101,44,32,99,111,108,117,109,110,44,32,109,101,115,115,97,103,101,32,125,41,59,10,32,32,32,32,102,117,110,99,116,105,111,110,32,118,97,108,105,100,97,116,101,67,111,110,102,105,103,40,99,41,32,123,10,32,32,32,32,32,32,32,32,105,102,32,40,99,46,115,114,32,60,32,49,32,124,124,32,99,46,107,115,109,112,115,32,60,32,49,32,124,124,32,99,46,110,99,104,110,108,115,32,60,32,49,32,124,124,32,99,46,110,99,104,110,108,115,73,110,32,60,32,48,32,124,124,32,33,40,99,46,122,101,114,111,100,98,102,115,32,62,32,48,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,110,101,119,32,69,114,114,111,114,40,34,105,110,118,97,108,105,100,32,101,110,103,105,110,101,32,99,111,110,102,105,103,34,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,125,10,32,32,32,32,99,111,110,115,116,32,84,79,75,69,78,95,82,69,32,61,32,47,40,91,32,92,116,93,43,41,124,40,59,91,94,92,110,93,42,41,124,40,92,114,63,92,110,41,124,40,40,63,58,92,100,43,92,46,63,92,100,42,124,92,46,92,100,43,41,40,63,58,91,101,69,93,91,43,45,93,63,92,100,43,41,63,41,124,40,91,65,45,90,97,45,122,95,93,91,65,45,90,97,45,122,48,45,57,95,93,42,41,124,40,34,91,94,34,92,110,93,42,34,41,124,40,91,43,92,45,42,47,40,41,44,61,93,41,47,121,59,10,32,32,32,32,99,111,110,115,116,32,82,69,83,69,82,86,69,68,32,61,32,110,101,119,32,83,101,116,40,91,34,105,110,115,116,114,34,44,32,34,101,110,100,105,110,34,44,32,34,111,117,116,34,44,32,34,111,115,99,105,108,34,44,32,34,108,105,110,101,34,44,32,34,105,110,34,44,32,34,99,104,97,110,34,93,41,59,10,32,32,32,32,102,117,110,99,116,105,111,110,32,116,111,107,101,110,105,122,101,40,115,111,117,114,99,101,41,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,101,110,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,108,101,116,32,108,105,110,101,32,61,32,49,59,10,32,32,32,32,32,32,32,32,108,101,116,32,99,111,108,32,61,32,49,59,10,32,32,32,32,32,32,32,32,108,101,116,32,112,111,115,32,61,32,48,59,10,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,112,111,115,32,60,32,115,111,117,114,99,101,46,108,101,110,103,116,104,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,84,79,75,69,78,95,82,69,46,108,97,115,116,73,110,100,101,120,32,61,32,112,111,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,109,32,61,32,84,79,75,69,78,95,82,69,46,101,120,101,99,40,115,111,117,114,99,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,109,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,111,107,101,110,115,46,112,117,115,104,40,123,32,107,105,110,100,58,32,34,101,114,114,111,114,34,44,32,116,101,120,116,58,32,115,111,117,114,99,101,91,112,111,115,93,44,32,108,105,110,101,44,32,99,111,108,117,109,110,58,32,99,111,108,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,111,115,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,108,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,101,120,116,32,61,32,109,91,48,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,109,91,51,93,32,33,61,61,32,117,110,100,101,102,105,110,101,100,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,111,107,101,110,115,46,112,117,115,104,40,123,32,107,105,110,100,58,32,34,110,108,34,44,32,116,101,120,116,58,32,34,92,110,34,44,32,108,105,110,101,44,32,99,111,108,117,109,110,58,32,99,111,108,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,105,110,101,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,108,32,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,105,102,32,40,109,91,49,93,32,33,61,61,32,117,110,100,101,102,105,110,101,100,32,124,124,32,109,91,50,93,32,33,61,61,32,117,110,100,101,102,105,110,101,100,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,108,32,43,61,32,116,101,120,116,46,108,101,110,103,116,104,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,107,105,110,100,32,61,32,34,111,112,34,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,109,91,52,93,32,33,61,61,32,117,110,100,101,102,105,110,101,100,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,107,105,110,100,32,61,32,34,110,117,109,98,101,114,34,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,105,102,32,40,109,91,53,93,32,33,61,61,32,117,110,100,101,102,105,110,101,100,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,107,105,110,100,32,61,32,47,94,112,92,100,43,36,47,46,116,101,115,116,40,116,101,120,116,41,32,63,32,34,112,102,105,101,108,100,34,32,58,32,34,105,100,101,110,116,34,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,105,102,32,40,109,91,54,93,32,33,61,61,32,117,110,100,101,102,105,110,101,100,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,107,105,110,100,32,61,32,34,115,116,114,105,110,103,34,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,111,107,101,110,115,46,112,117,115,104,40,123,32,107,105,110,100,44,32,116,101,120,116,44,32,108,105,110,101,44,32,99,111,108,117,109,110,58,32,99,111,108,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,108,32,43,61,32,116,101,120,116,46,108,101,110,103,116,104,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,112,111,115,32,61,32,109,46,105,110,100,101,120,32,43,32,116,101,120,116,46,108,101,110,103,116,104,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,116,111,107,101,110,115,46,112,117,115,104,40,123,32,107,105,110,100,58,32,34,101,111,102,34,44,32,116,101,120,116,58,32,34,34,44,32,108,105,110,101,44,32,99,111,108,117,109,110,58,32,99,111,108,32,125,41,59,10,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,111,107,101,110,115,59,10,32,32,32,32,125,10,32,32,32,32,99,108,97,115,115,32,80,97,114,115,101,65,98,111,114,116,32,101,120,116,101,110,100,115,32,69,114,114,111,114,32,123,10,32,32,32,32,125,10,32,32,32,32,99,108,97,115,115,32,80,97,114,115,101,114,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,114,117,99,116,111,114,40,116,111,107,101,110,115,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,112,111,115,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,100,105,97,103,110,111,115,116,105,99,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,116,111,107,101,110,115,32,61,32,116,111,107,101,110,115,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,101,101,107,40,41,32,123,32,114,101,116,117,114,110,32,116,104,105,115,46,116,111,107,101,110,115,91,116,104,105,115,46,112,111,115,93,59,32,125,10,32,32,32,32,32,32,32,32,97,100,118,97,110,99,101,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,116,111,107,101,110,115,91,116,104,105,115,46,112,111,115,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,33,61,61,32,34,101,111,102,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,112,111,115,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,111,107,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,102,97,105,108,40,116,111,107,44,32,109,101,115,115,97,103,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,100,105,97,103,110,111,115,116,105,99,115,46,112,117,115,104,40,100,105,97,103,40,116,111,107,46,108,105,110,101,44,32,116,111,107,46,99,111,108,117,109,110,44,32,109,101,115,115,97,103,101,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,110,101,119,32,80,97,114,115,101,65,98,111,114,116,40,109,101,115,115,97,103,101,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,115,107,105,112,78,101,119,108,105,110,101,115,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,116,104,105,115,46,112,101,101,107,40,41,46,107,105,110,100,32,61,61,61,32,34,110,108,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,115,107,105,112,84,111,78,101,119,108,105,110,101,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,116,104,105,115,46,112,101,101,107,40,41,46,107,105,110,100,32,33,61,61,32,34,110,108,34,32,38,38,32,116,104,105,115,46,112,101,101,107,40,41,46,107,105,110,100,32,33,61,61,32,34,101,111,102,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,101,120,112,101,99,116,79,112,40,99,104,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,111,112,34,32,38,38,32,116,111,107,46,116,101,120,116,32,61,61,61,32,99,104,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,96,101,120,112,101,99,116,101,100,32,39,36,123,99,104,125,39,96,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,97,114,115,101,80,114,111,103,114,97,109,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,111,117,116,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,59,59,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,107,105,112,78,101,119,108,105,110,101,115,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,101,111,102,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,111,117,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,105,100,101,110,116,34,32,38,38,32,116,111,107,46,116,101,120,116,32,61,61,61,32,34,105,110,115,116,114,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,115,116,114,32,61,32,116,104,105,115,46,112,97,114,115,101,73,110,115,116,114,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,105,110,115,116,114,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,111,117,116,46,112,117,115,104,40,105,110,115,116,114,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,100,105,97,103,110,111,115,116,105,99,115,46,112,117,115,104,40,100,105,97,103,40,116,111,107,46,108,105,110,101,44,32,116,111,107,46,99,111,108,117,109,110,44,32,34,101,120,112,101,99,116,101,100,32,39,105,110,115,116,114,39,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,107,105,112,84,111,78,101,119,108,105,110,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,97,114,115,101,73,110,115,116,114,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,104,101,97,100,101,114,32,61,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,33,61,61,32,34,110,117,109,98,101,114,34,32,124,124,32,33,47,94,92,100,43,36,47,46,116,101,115,116,40,116,111,107,46,116,101,120,116,41,32,124,124,32,112,97,114,115,101,73,110,116,40,116,111,107,46,116,101,120,116,44,32,49,48,41,32,60,32,49,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,100,105,97,103,110,111,115,116,105,99,115,46,112,117,115,104,40,100,105,97,103,40,116,111,107,46,108,105,110,101,44,32,116,111,107,46,99,111,108,117,109,110,44,32,34,105,110,115,116,114,117,109,101,110,116,32,110,117,109,98,101,114,32,109,117,115,116,32,98,101,32,97,32,112,111,115,105,116,105,118,101,32,105,110,116,101,103,101,114,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,107,105,112,84,111,69,110,100,105,110,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,110,117,108,108,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,117,109,98,101,114,32,61,32,112,97,114,115,101,73,110,116,40,116,104,105,115,46,97,100,118,97,110,99,101,40,41,46,116,101,120,116,44,32,49,48,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,111,100,121,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,98,97,100,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,59,59,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,107,105,112,78,101,119,108,105,110,101,115,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,46,107,105,110,100,32,61,61,61,32,34,101,111,102,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,100,105,97,103,110,111,115,116,105,99,115,46,112,117,115,104,40,100,105,97,103,40,104,101,97,100,101,114,46,108,105,110,101,44,32,104,101,97,100,101,114,46,99,111,108,117,109,110,44,32,34,39,105,110,115,116,114,39,32,119,105,116,104,111,117,116,32,109,97,116,99,104,105,110,103,32,39,101,110,100,105,110,39,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,110,117,108,108,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,46,107,105,110,100,32,61,61,61,32,34,105,100,101,110,116,34,32,38,38,32,116,46,116,101,120,116,32,61,61,61,32,34,101,110,100,105,110,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,98,97,100,32,63,32,110,117,108,108,32,58,32,123,32,110,117,109,98,101,114,44,32,98,111,100,121,44,32,108,105,110,101,58,32,104,101,97,100,101,114,46,108,105,110,101,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,114,121,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,111,100,121,46,112,117,115,104,40,116,104,105,115,46,112,97,114,115,101,83,116,109,116,40,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,120,116,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,120,116,46,107,105,110,100,32,33,61,61,32,34,110,108,34,32,38,38,32,110,120,116,46,107,105,110,100,32,33,61,61,32,34,101,111,102,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,110,120,116,44,32,96,117,110,101,120,112,101,99,116,101,100,32,39,36,123,110,120,116,46,116,101,120,116,125,39,32,97,102,116,101,114,32,115,116,97,116,101,109,101,110,116,96,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,116,99,104,32,40,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,40,101,32,105,110,115,116,97,110,99,101,111,102,32,80,97,114,115,101,65,98,111,114,116,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,97,100,32,61,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,107,105,112,84,111,78,101,119,108,105,110,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,115,107,105,112,84,111,69,110,100,105,110,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,59,59,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,101,111,102,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,105,100,101,110,116,34,32,38,38,32,116,111,107,46,116,101,120,116,32,61,61,61,32,34,101,110,100,105,110,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,97,114,115,101,83,116,109,116,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,105,100,101,110,116,34,32,38,38,32,116,111,107,46,116,101,120,116,32,61,61,61,32,34,111,117,116,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,101,120,112,114,115,32,61,32,91,116,104,105,115,46,112,97,114,115,101,69,120,112,114,40,41,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,116,104,105,115,46,112,101,101,107,40,41,46,107,105,110,100,32,61,61,61,32,34,111,112,34,32,38,38,32,116,104,105,115,46,112,101,101,107,40,41,46,116,101,120,116,32,61,61,61,32,34,44,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,120,112,114,115,46,112,117,115,104,40,116,104,105,115,46,112,97,114,115,101,69,120,112,114,40,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,111,117,116,34,44,32,101,120,112,114,115,44,32,108,105,110,101,58,32,116,111,107,46,108,105,110,101,44,32,99,111,108,117,109,110,58,32,116,111,107,46,99,111,108,117,109,110,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,105,100,101,110,116,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,82,69,83,69,82,86,69,68,46,104,97,115,40,116,111,107,46,116,101,120,116,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,96,39,36,123,116,111,107,46,116,101,120,116,125,39,32,105,115,32,114,101,115,101,114,118,101,100,96,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,97,109,101,32,61,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,46,116,101,120,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,120,112,101,99,116,79,112,40,34,61,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,97,115,115,105,103,110,34,44,32,110,97,109,101,44,32,101,120,112,114,58,32,116,104,105,115,46,112,97,114,115,101,69,120,112,114,40,41,44,32,108,105,110,101,58,32,116,111,107,46,108,105,110,101,44,32,99,111,108,117,109,110,58,32,116,111,107,46,99,111,108,117,109,110,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,96,101,120,112,101,99,116,101,100,32,97,32,115,116,97,116,101,109,101,110,116,44,32,102,111,117,110,100,32,39,36,123,116,111,107,46,116,101,120,116,32,124,124,32,116,111,107,46,107,105,110,100,125,39,96,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,97,114,115,101,69,120,112,114,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,108,101,102,116,32,61,32,116,104,105,115,46,112,97,114,115,101,84,101,114,109,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,116,104,105,115,46,112,101,101,107,40,41,46,107,105,110,100,32,61,61,61,32,34,111,112,34,32,38,38,32,40,116,104,105,115,46,112,101,101,107,40,41,46,116,101,120,116,32,61,61,61,32,34,43,34,32,124,124,32,116,104,105,115,46,112,101,101,107,40,41,46,116,101,120,116,32,61,61,61,32,34,45,34,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,111,112,32,61,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,46,116,101,120,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,101,102,116,32,61,32,123,32,116,58,32,34,98,105,110,34,44,32,111,112,44,32,108,101,102,116,44,32,114,105,103,104,116,58,32,116,104,105,115,46,112,97,114,115,101,84,101,114,109,40,41,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,108,101,102,116,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,97,114,115,101,84,101,114,109,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,108,101,102,116,32,61,32,116,104,105,115,46,112,97,114,115,101,70,97,99,116,111,114,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,116,104,105,115,46,112,101,101,107,40,41,46,107,105,110,100,32,61,61,61,32,34,111,112,34,32,38,38,32,40,116,104,105,115,46,112,101,101,107,40,41,46,116,101,120,116,32,61,61,61,32,34,42,34,32,124,124,32,116,104,105,115,46,112,101,101,107,40,41,46,116,101,120,116,32,61,61,61,32,34,47,34,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,111,112,32,61,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,46,116,101,120,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,101,102,116,32,61,32,123,32,116,58,32,34,98,105,110,34,44,32,111,112,44,32,108,101,102,116,44,32,114,105,103,104,116,58,32,116,104,105,115,46,112,97,114,115,101,70,97,99,116,111,114,40,41,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,108,101,102,116,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,97,114,115,101,70,97,99,116,111,114,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,110,117,109,98,101,114,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,110,117,109,34,44,32,118,97,108,117,101,58,32,112,97,114,115,101,70,108,111,97,116,40,116,111,107,46,116,101,120,116,41,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,112,102,105,101,108,100,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,100,101,120,32,61,32,112,97,114,115,101,73,110,116,40,116,111,107,46,116,101,120,116,46,115,108,105,99,101,40,49,41,44,32,49,48,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,105,110,100,101,120,32,60,32,49,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,34,112,45,102,105,101,108,100,32,105,110,100,101,120,32,109,117,115,116,32,98,101,32,49,32,111,114,32,103,114,101,97,116,101,114,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,112,102,105,101,108,100,34,44,32,105,110,100,101,120,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,111,112,34,32,38,38,32,116,111,107,46,116,101,120,116,32,61,61,61,32,34,40,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,110,101,114,32,61,32,116,104,105,115,46,112,97,114,115,101,69,120,112,114,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,120,112,101,99,116,79,112,40,34,41,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,105,110,110,101,114,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,111,107,46,107,105,110,100,32,61,61,61,32,34,105,100,101,110,116,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,97,109,101,32,61,32,116,111,107,46,116,101,120,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,97,109,101,32,61,61,61,32,34,111,115,99,105,108,34,32,124,124,32,110,97,109,101,32,61,61,61,32,34,108,105,110,101,34,32,124,124,32,110,97,109,101,32,61,61,61,32,34,105,110,34,32,124,124,32,110,97,109,101,32,61,61,61,32,34,99,104,97,110,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,104,105,115,46,112,97,114,115,101,67,97,108,108,40,110,97,109,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,82,69,83,69,82,86,69,68,46,104,97,115,40,110,97,109,101,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,96,39,36,123,110,97,109,101,125,39,32,105,115,32,114,101,115,101,114,118,101,100,96,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,118,97,114,34,44,32,110,97,109,101,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,96,101,120,112,101,99,116,101,100,32,97,110,32,101,120,112,114,101,115,115,105,111,110,44,32,102,111,117,110,100,32,39,36,123,116,111,107,46,116,101,120,116,32,124,124,32,116,111,107,46,107,105,110,100,125,39,96,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,97,114,115,101,67,97,108,108,40,110,97,109,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,111,107,32,61,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,120,112,101,99,116,79,112,40,34,40,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,97,109,101,32,61,61,61,32,34,105,110,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,114,103,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,97,114,103,46,107,105,110,100,32,33,61,61,32,34,110,117,109,98,101,114,34,32,124,124,32,33,47,94,92,100,43,36,47,46,116,101,115,116,40,97,114,103,46,116,101,120,116,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,97,114,103,44,32,34,105,110,40,41,32,116,97,107,101,115,32,97,110,32,105,110,116,101,103,101,114,32,99,104,97,110,110,101,108,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,120,112,101,99,116,79,112,40,34,41,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,105,110,34,44,32,99,104,97,110,110,101,108,58,32,112,97,114,115,101,73,110,116,40,97,114,103,46,116,101,120,116,44,32,49,48,41,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,97,109,101,32,61,61,61,32,34,99,104,97,110,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,114,103,32,61,32,116,104,105,115,46,112,101,101,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,97,114,103,46,107,105,110,100,32,33,61,61,32,34,115,116,114,105,110,103,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,97,114,103,44,32,34,99,104,97,110,40,41,32,116,97,107,101,115,32,97,32,113,117,111,116,101,100,32,99,104,97,110,110,101,108,32,110,97,109,101,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,104,97,110,78,97,109,101,32,61,32,97,114,103,46,116,101,120,116,46,115,108,105,99,101,40,49,44,32,45,49,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,99,104,97,110,78,97,109,101,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,97,114,103,44,32,34,99,104,97,110,110,101,108,32,110,97,109,101,32,109,117,115,116,32,98,101,32,110,111,110,45,101,109,112,116,121,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,120,112,101,99,116,79,112,40,34,41,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,99,104,97,110,34,44,32,110,97,109,101,58,32,99,104,97,110,78,97,109,101,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,114,103,115,32,61,32,91,116,104,105,115,46,112,97,114,115,101,69,120,112,114,40,41,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,116,104,105,115,46,112,101,101,107,40,41,46,107,105,110,100,32,61,61,61,32,34,111,112,34,32,38,38,32,116,104,105,115,46,112,101,101,107,40,41,46,116,101,120,116,32,61,61,61,32,34,44,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,100,118,97,110,99,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,97,114,103,115,46,112,117,115,104,40,116,104,105,115,46,112,97,114,115,101,69,120,112,114,40,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,120,112,101,99,116,79,112,40,34,41,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,97,109,101,32,61,61,61,32,34,111,115,99,105,108,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,97,114,103,115,46,108,101,110,103,116,104,32,33,61,61,32,50,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,34,111,115,99,105,108,40,41,32,116,97,107,101,115,32,101,120,97,99,116,108,121,32,50,32,97,114,103,117,109,101,110,116,115,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,111,115,99,105,108,34,44,32,97,109,112,58,32,97,114,103,115,91,48,93,44,32,102,114,101,113,58,32,97,114,103,115,91,49,93,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,97,114,103,115,46,108,101,110,103,116,104,32,33,61,61,32,51,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,116,104,105,115,46,102,97,105,108,40,116,111,107,44,32,34,108,105,110,101,40,41,32,116,97,107,101,115,32,101,120,97,99,116,108,121,32,51,32,97,114,103,117,109,101,110,116,115,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,116,58,32,34,108,105,110,101,34,44,32,97,58,32,97,114,103,115,91,48,93,44,32,100,117,114,58,32,97,114,103,115,91,49,93,44,32,98,58,32,97,114,103,115,91,50,93,32,125,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,125,10,32,32,32,32,102,117,110,99,116,105,111,110,32,112,97,114,115,101,79,114,99,104,101,115,116,114,97,40,115,111,117,114,99,101,41,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,112,97,114,115,101,114,32,61,32,110,101,119,32,80,97,114,115,101,114,40,116,111,107,101,110,105,122,101,40,115,111,117,114,99,101,41,41,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,115,116,114,117,109,101,110,116,115,32,61,32,112,97,114,115,101,114,46,112,97,114,115,101,80,114,111,103,114,97,109,40,41,59,10,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,105,110,115,116,114,117,109,101,110,116,115,44,32,100,105,97,103,110,111,115,116,105,99,115,58,32,112,97,114,115,101,114,46,100,105,97,103,110,111,115,116,105,99,115,32,125,59,10,32,32,32,32,125,10,32,32,32,32,47,47,32,45,45,45,45,32,115,101,109,97,110,116,105,99,32,99,104,101,99,107,115,32,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,10,32,32,32,32,99,111,110,115,116,32,66,85,73,76,84,73,78,83,32,61,32,91,34,115,114,34,44,32,34,107,115,109,112,115,34,44,32,34,110,99,104,110,108,115,34,44,32,34,110,99,104,110,108,115,95,105,34,44,32,34,122,101,114,111,100,98,102,115,34,93,59,10,32,32,32,32,102,117,110,99,116,105,111,110,32,99,104,101,99,107,73,110,115,116,114,117,109,101,110,116,40,105,110,115,116,114,44,32,110,99,104,110,108,115,44,32,110,99,104,110,108,115,73,110,41,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,100,105,97,103,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,115,115,105,103,110,101,100,32,61,32,110,101,119,32,83,101,116,40,66,85,73,76,84,73,78,83,41,59,10,32,32,32,32,32,32,32,32,108,101,116,32,111,117,116,83,101,101,110,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,119,97,108,107,32,61,32,40,110,111,100,101,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,32,61,62,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,115,119,105,116,99,104,32,40,110,111,100,101,46,116,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,118,97,114,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,97,115,115,105,103,110,101,100,46,104,97,115,40,110,111,100,101,46,110,97,109,101,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,44,32,99,111,108,117,109,110,44,32,96,117,110,107,110,111,119,110,32,105,100,101,110,116,105,102,105,101,114,32,39,36,123,110,111,100,101,46,110,97,109,101,125,39,96,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,98,105,110,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,110,111,100,101,46,108,101,102,116,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,110,111,100,101,46,114,105,103,104,116,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,111,115,99,105,108,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,110,111,100,101,46,97,109,112,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,110,111,100,101,46,102,114,101,113,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,108,105,110,101,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,110,111,100,101,46,97,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,110,111,100,101,46,100,117,114,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,110,111,100,101,46,98,44,32,108,105,110,101,44,32,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,105,110,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,111,100,101,46,99,104,97,110,110,101,108,32,62,61,32,110,99,104,110,108,115,73,110,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,44,32,99,111,108,117,109,110,44,32,96,105,110,40,36,123,110,111,100,101,46,99,104,97,110,110,101,108,125,41,32,111,117,116,32,111,102,32,114,97,110,103,101,58,32,101,110,103,105,110,101,32,104,97,115,32,36,123,110,99,104,110,108,115,73,110,125,32,105,110,112,117,116,32,99,104,97,110,110,101,108,40,115,41,96,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,101,102,97,117,108,116,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,59,10,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,115,116,109,116,32,111,102,32,105,110,115,116,114,46,98,111,100,121,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,115,116,109,116,46,116,32,61,61,61,32,34,97,115,115,105,103,110,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,115,116,109,116,46,101,120,112,114,44,32,115,116,109,116,46,108,105,110,101,44,32,115,116,109,116,46,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,97,115,115,105,103,110,101,100,46,97,100,100,40,115,116,109,116,46,110,97,109,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,111,117,116,83,101,101,110,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,115,116,109,116,46,108,105,110,101,44,32,115,116,109,116,46,99,111,108,117,109,110,44,32,34,109,111,114,101,32,116,104,97,110,32,111,110,101,32,111,117,116,32,115,116,97,116,101,109,101,110,116,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,111,117,116,83,101,101,110,32,61,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,115,116,109,116,46,101,120,112,114,115,46,108,101,110,103,116,104,32,62,32,110,99,104,110,108,115,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,115,116,109,116,46,108,105,110,101,44,32,115,116,109,116,46,99,111,108,117,109,110,44,32,96,111,117,116,32,104,97,115,32,36,123,115,116,109,116,46,101,120,112,114,115,46,108,101,110,103,116,104,125,32,99,104,97,110,110,101,108,115,32,98,117,116,32,101,110,103,105,110,101,32,104,97,115,32,36,123,110,99,104,110,108,115,125,96,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,101,32,111,102,32,115,116,109,116,46,101,120,112,114,115,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,119,97,108,107,40,101,44,32,115,116,109,116,46,108,105,110,101,44,32,115,116,109,116,46,99,111,108,117,109,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,100,105,97,103,115,59,10,32,32,32,32,125,10,32,32,32,32,102,117,110,99,116,105,111,110,32,99,111,109,112,105,108,101,73,110,115,116,114,117,109,101,110,116,40,105,110,115,116,114,44,32,99,102,103,41,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,115,108,111,116,115,32,61,32,110,101,119,32,77,97,112,40,41,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,104,97,110,78,97,109,101,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,108,101,116,32,110,115,116,97,116,101,32,61,32,48,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,117,105,108,116,105,110,115,32,61,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,115,114,58,32,99,102,103,46,115,114,44,32,107,115,109,112,115,58,32,99,102,103,46,107,115,109,112,115,44,32,110,99,104,110,108,115,58,32,99,102,103,46,110,99,104,110,108,115,44,10,32,32,32,32,32,32,32,32,32,32,32,32,110,99,104,110,108,115,95,105,58,32,99,102,103,46,110,99,104,110,108,115,73,110,44,32,122,101,114,111,100,98,102,115,58,32,99,102,103,46,122,101,114,111,100,98,102,115,44,10,32,32,32,32,32,32,32,32,125,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,111,109,112,105,108,101,32,61,32,40,110,111,100,101,41,32,61,62,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,115,119,105,116,99,104,32,40,110,111,100,101,46,116,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,110,117,109,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,118,32,61,32,110,111,100,101,46,118,97,108,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,41,32,61,62,32,118,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,112,102,105,101,108,100,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,100,120,32,61,32,110,111,100,101,46,105,110,100,101,120,32,45,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,105,100,120,32,60,32,99,116,120,46,112,102,105,101,108,100,115,46,108,101,110,103,116,104,32,63,32,99,116,120,46,112,102,105,101,108,100,115,91,105,100,120,93,32,58,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,118,97,114,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,111,100,101,46,110,97,109,101,32,105,110,32,98,117,105,108,116,105,110,115,32,38,38,32,33,115,108,111,116,115,46,104,97,115,40,110,111,100,101,46,110,97,109,101,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,118,32,61,32,98,117,105,108,116,105,110,115,91,110,111,100,101,46,110,97,109,101,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,41,32,61,62,32,118,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,115,108,111,116,32,61,32,115,108,111,116,115,46,103,101,116,40,110,111,100,101,46,110,97,109,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,99,116,120,46,118,97,108,115,91,115,108,111,116,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,98,105,110,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,108,102,32,61,32,99,111,109,112,105,108,101,40,110,111,100,101,46,108,101,102,116,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,114,102,32,61,32,99,111,109,112,105,108,101,40,110,111,100,101,46,114,105,103,104,116,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,119,105,116,99,104,32,40,110,111,100,101,46,111,112,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,43,34,58,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,108,102,40,99,116,120,41,32,43,32,114,102,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,45,34,58,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,108,102,40,99,116,120,41,32,45,32,114,102,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,42,34,58,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,108,102,40,99,116,120,41,32,42,32,114,102,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,101,102,97,117,108,116,58,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,108,102,40,99,116,120,41,32,47,32,114,102,40,99,116,120,41,59,32,47,47,32,73,69,69,69,32,105,110,102,47,110,97,110,44,32,99,108,97,109,112,101,100,32,111,110,32,119,114,105,116,101,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,111,115,99,105,108,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,109,112,102,32,61,32,99,111,109,112,105,108,101,40,110,111,100,101,46,97,109,112,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,102,114,101,113,102,32,61,32,99,111,109,112,105,108,101,40,110,111,100,101,46,102,114,101,113,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,115,108,111,116,32,61,32,110,115,116,97,116,101,43,43,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,118,83,114,32,61,32,49,32,47,32,99,102,103,46,115,114,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,112,104,32,61,32,99,116,120,46,115,116,97,116,101,91,115,108,111,116,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,121,32,61,32,97,109,112,102,40,99,116,120,41,32,42,32,77,97,116,104,46,115,105,110,40,84,87,79,95,80,73,32,42,32,112,104,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,104,32,43,61,32,102,114,101,113,102,40,99,116,120,41,32,42,32,105,110,118,83,114,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,40,112,104,32,62,61,32,48,32,38,38,32,112,104,32,60,32,49,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,104,32,45,61,32,77,97,116,104,46,102,108,111,111,114,40,112,104,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,116,120,46,115,116,97,116,101,91,115,108,111,116,93,32,61,32,112,104,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,121,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,108,105,110,101,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,102,32,61,32,99,111,109,112,105,108,101,40,110,111,100,101,46,97,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,100,102,32,61,32,99,111,109,112,105,108,101,40,110,111,100,101,46,100,117,114,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,102,32,61,32,99,111,109,112,105,108,101,40,110,111,100,101,46,98,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,118,83,114,32,61,32,49,32,47,32,99,102,103,46,115,114,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,100,117,114,32,61,32,100,102,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,32,61,32,98,102,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,116,32,61,32,99,116,120,46,107,32,42,32,105,110,118,83,114,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,100,117,114,32,60,61,32,48,32,124,124,32,116,32,62,61,32,100,117,114,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,98,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,32,61,32,97,102,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,97,32,43,32,40,98,32,45,32,97,41,32,42,32,40,116,32,47,32,100,117,114,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,105,110,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,104,32,61,32,110,111,100,101,46,99,104,97,110,110,101,108,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,99,116,120,46,115,112,105,110,91,99,116,120,46,105,110,79,102,102,32,43,32,99,104,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,101,102,97,117,108,116,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,105,100,120,32,61,32,99,104,97,110,78,97,109,101,115,46,105,110,100,101,120,79,102,40,110,111,100,101,46,110,97,109,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,105,100,120,32,60,32,48,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,100,120,32,61,32,99,104,97,110,78,97,109,101,115,46,108,101,110,103,116,104,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,104,97,110,78,97,109,101,115,46,112,117,115,104,40,110,111,100,101,46,110,97,109,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,40,99,116,120,41,32,61,62,32,99,116,120,46,99,104,97,110,115,91,105,100,120,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,97,115,115,105,103,110,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,108,101,116,32,111,117,116,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,115,116,109,116,32,111,102,32,105,110,115,116,114,46,98,111,100,121,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,115,116,109,116,46,116,32,61,61,61,32,34,97,115,115,105,103,110,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,102,110,32,61,32,99,111,109,112,105,108,101,40,115,116,109,116,46,101,120,112,114,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,115,108,111,116,115,46,104,97,115,40,115,116,109,116,46,110,97,109,101,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,108,111,116,115,46,115,101,116,40,115,116,109,116,46,110,97,109,101,44,32,115,108,111,116,115,46,115,105,122,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,97,115,115,105,103,110,115,46,112,117,115,104,40,91,115,108,111,116,115,46,103,101,116,40,115,116,109,116,46,110,97,109,101,41,44,32,102,110,93,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,111,117,116,115,32,61,32,115,116,109,116,46,101,120,112,114,115,46,109,97,112,40,99,111,109,112,105,108,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,110,117,109,98,101,114,58,32,105,110,115,116,114,46,110,117,109,98,101,114,44,32,97,115,115,105,103,110,115,44,32,111,117,116,115,44,32,110,118,97,108,115,58,32,115,108,111,116,115,46,115,105,122,101,44,32,110,115,116,97,116,101,44,32,99,104,97,110,78,97,109,101,115,32,125,59,10,32,32,32,32,125,10,32,32,32,32,102,117,110,99,116,105,111,110,32,112,97,114,115,101,83,99,111,114,101,40,116,101,120,116,41,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,101,118,101,110,116,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,100,105,97,103,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,108,105,110,101,115,32,61,32,116,101,120,116,46,115,112,108,105,116,40,47,92,114,63,92,110,47,41,59,10,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,105,32,61,32,48,59,32,105,32,60,32,108,105,110,101,115,46,108,101,110,103,116,104,59,32,105,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,108,105,110,101,110,111,32,61,32,105,32,43,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,108,105,110,101,32,61,32,108,105,110,101,115,91,105,93,46,115,112,108,105,116,40,34,59,34,44,32,49,41,91,48,93,46,116,114,105,109,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,108,105,110,101,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,102,105,101,108,100,115,32,61,32,108,105,110,101,46,115,112,108,105,116,40,47,92,115,43,47,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,111,112,32,61,32,102,105,101,108,100,115,91,48,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,111,112,32,61,61,61,32,34,105,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,102,105,101,108,100,115,46,108,101,110,103,116,104,32,60,32,52,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,34,110,111,116,101,32,108,105,110,101,32,110,101,101,100,115,32,73,78,83,84,82,32,83,84,65,82,84,32,68,85,82,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,115,116,114,32,61,32,78,117,109,98,101,114,40,102,105,101,108,100,115,91,49,93,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,47,94,92,100,43,36,47,46,116,101,115,116,40,102,105,101,108,100,115,91,49,93,41,32,124,124,32,105,110,115,116,114,32,60,32,49,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,96,105,110,115,116,114,117,109,101,110,116,32,109,117,115,116,32,98,101,32,97,32,112,111,115,105,116,105,118,101,32,105,110,116,101,103,101,114,58,32,39,36,123,102,105,101,108,100,115,91,49,93,125,39,96,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,117,109,115,32,61,32,102,105,101,108,100,115,46,115,108,105,99,101,40,50,41,46,109,97,112,40,78,117,109,98,101,114,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,117,109,115,46,115,111,109,101,40,40,110,41,32,61,62,32,78,117,109,98,101,114,46,105,115,78,97,78,40,110,41,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,34,109,97,108,102,111,114,109,101,100,32,110,117,109,98,101,114,32,105,110,32,110,111,116,101,32,108,105,110,101,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,91,115,116,97,114,116,84,44,32,100,117,114,44,32,46,46,46,112,102,105,101,108,100,115,93,32,61,32,110,117,109,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,115,116,97,114,116,84,32,60,32,48,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,34,115,116,97,114,116,32,109,117,115,116,32,98,101,32,62,61,32,48,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,100,117,114,32,61,61,61,32,48,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,34,100,117,114,97,116,105,111,110,32,109,117,115,116,32,98,101,32,110,111,110,122,101,114,111,32,40,110,101,103,97,116,105,118,101,32,61,32,104,101,108,100,41,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,118,101,110,116,115,46,112,117,115,104,40,123,32,107,105,110,100,58,32,34,110,111,116,101,34,44,32,105,110,115,116,114,44,32,115,116,97,114,116,58,32,115,116,97,114,116,84,44,32,100,117,114,44,32,112,102,105,101,108,100,115,44,32,107,101,121,58,32,110,117,108,108,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,105,102,32,40,111,112,32,61,61,61,32,34,101,34,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,102,105,101,108,100,115,46,108,101,110,103,116,104,32,62,32,50,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,34,101,110,100,32,108,105,110,101,32,116,97,107,101,115,32,97,116,32,109,111,115,116,32,111,110,101,32,116,105,109,101,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,116,105,109,101,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,102,105,101,108,100,115,46,108,101,110,103,116,104,32,61,61,61,32,50,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,105,109,101,32,61,32,78,117,109,98,101,114,40,102,105,101,108,100,115,91,49,93,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,78,117,109,98,101,114,46,105,115,78,97,78,40,116,105,109,101,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,34,109,97,108,102,111,114,109,101,100,32,101,110,100,32,116,105,109,101,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,105,109,101,32,60,32,48,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,34,101,110,100,32,116,105,109,101,32,109,117,115,116,32,98,101,32,62,61,32,48,34,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,116,105,110,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,118,101,110,116,115,46,112,117,115,104,40,123,32,107,105,110,100,58,32,34,101,110,100,34,44,32,105,110,115,116,114,58,32,48,44,32,115,116,97,114,116,58,32,116,105,109,101,44,32,100,117,114,58,32,48,44,32,112,102,105,101,108,100,115,58,32,91,93,44,32,107,101,121,58,32,110,117,108,108,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,100,105,97,103,40,108,105,110,101,110,111,44,32,49,44,32,96,117,110,107,110,111,119,110,32,115,99,111,114,101,32,115,116,97,116,101,109,101,110,116,32,39,36,123,111,112,125,39,96,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,101,118,101,110,116,115,44,32,100,105,97,103,110,111,115,116,105,99,115,58,32,100,105,97,103,115,32,125,59,10,32,32,32,32,125,10,32,32,32,32,102,117,110,99,116,105,111,110,32,109,105,100,105,84,111,69,118,101,110,116,40,115,116,97,116,117,115,44,32,100,49,44,32,100,50,41,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,107,105,110,100,32,61,32,115,116,97,116,117,115,32,38,32,48,120,102,48,59,10,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,104,97,110,110,101,108,32,61,32,115,116,97,116,117,115,32,38,32,48,120,48,102,59,10,32,32,32,32,32,32,32,32,105,102,32,40,107,105,110,100,32,61,61,61,32,48,120,57,48,32,38,38,32,100,50,32,62,32,48,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,102,114,101,113,32,61,32,52,52,48,32,42,32,77,97,116,104,46,112,111,119,40,50,44,32,40,100,49,32,45,32,54,57,41,32,47,32,49,50,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,107,105,110,100,58,32,34,110,111,116,101,34,44,32,105,110,115,116,114,58,32,99,104,97,110,110,101,108,32,43,32,49,44,32,115,116,97,114,116,58,32,48,44,32,100,117,114,58,32,45,49,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,102,105,101,108,100,115,58,32,91,100,50,32,47,32,49,50,55,44,32,102,114,101,113,93,44,32,107,101,121,58,32,100,49,32,125,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,105,102,32,40,107,105,110,100,32,61,61,61,32,48,120,56,48,32,124,124,32,40,107,105,110,100,32,61,61,61,32,48,120,57,48,32,38,38,32,100,50,32,61,61,61,32,48,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,107,105,110,100,58,32,34,114,101,108,101,97,115,101,34,44,32,105,110,115,116,114,58,32,99,104,97,110,110,101,108,32,43,32,49,44,32,115,116,97,114,116,58,32,48,44,32,100,117,114,58,32,48,44,32,112,102,105,101,108,100,115,58,32,91,93,44,32,107,101,121,58,32,100,49,32,125,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,110,117,108,108,59,10,32,32,32,32,125,10,32,32,32,32,99,108,97,115,115,32,69,110,103,105,110,101,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,114,117,99,116,111,114,40,99,111,110,102,105,103,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,111,110,115,111,108,101,32,61,32,110,117,108,108,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,98,108,111,99,107,73,110,100,101,120,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,110,105,115,104,101,100,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,108,97,109,112,101,100,83,97,109,112,108,101,115,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,105,110,115,116,114,117,109,101,110,116,115,32,61,32,110,101,119,32,77,97,112,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,98,117,115,32,61,32,110,101,119,32,77,97,112,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,112,101,110,100,105,110,103,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,99,116,105,118,101,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,101,113,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,110,100,82,101,97,99,104,101,100,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,118,97,108,105,100,97,116,101,67,111,110,102,105,103,40,99,111,110,102,105,103,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,111,110,102,105,103,32,61,32,99,111,110,102,105,103,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,112,105,110,32,61,32,110,101,119,32,70,108,111,97,116,54,52,65,114,114,97,121,40,99,111,110,102,105,103,46,107,115,109,112,115,32,42,32,99,111,110,102,105,103,46,110,99,104,110,108,115,73,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,112,111,117,116,32,61,32,110,101,119,32,70,108,111,97,116,54,52,65,114,114,97,121,40,99,111,110,102,105,103,46,107,115,109,112,115,32,42,32,99,111,110,102,105,103,46,110,99,104,110,108,115,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,115,97,121,40,116,101,120,116,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,104,105,115,46,99,111,110,115,111,108,101,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,111,110,115,111,108,101,40,116,101,120,116,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,103,101,116,32,116,105,109,101,83,101,99,111,110,100,115,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,104,105,115,46,98,108,111,99,107,73,110,100,101,120,32,42,32,116,104,105,115,46,99,111,110,102,105,103,46,107,115,109,112,115,32,47,32,116,104,105,115,46,99,111,110,102,105,103,46,115,114,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,99,111,109,112,105,108,101,79,114,99,40,115,111,117,114,99,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,123,32,105,110,115,116,114,117,109,101,110,116,115,44,32,100,105,97,103,110,111,115,116,105,99,115,32,125,32,61,32,112,97,114,115,101,79,114,99,104,101,115,116,114,97,40,115,111,117,114,99,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,100,105,97,103,115,32,61,32,91,46,46,46,100,105,97,103,110,111,115,116,105,99,115,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,100,105,97,103,115,46,108,101,110,103,116,104,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,105,110,115,116,114,32,111,102,32,105,110,115,116,114,117,109,101,110,116,115,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,115,46,112,117,115,104,40,46,46,46,99,104,101,99,107,73,110,115,116,114,117,109,101,110,116,40,105,110,115,116,114,44,32,116,104,105,115,46,99,111,110,102,105,103,46,110,99,104,110,108,115,44,32,116,104,105,115,46,99,111,110,102,105,103,46,110,99,104,110,108,115,73,110,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,100,105,97,103,115,46,108,101,110,103,116,104,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,100,32,111,102,32,100,105,97,103,115,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,97,121,40,96,101,114,114,111,114,58,32,108,105,110,101,32,36,123,100,46,108,105,110,101,125,58,36,123,100,46,99,111,108,117,109,110,125,58,32,36,123,100,46,109,101,115,115,97,103,101,125,96,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,111,107,58,32,102,97,108,115,101,44,32,100,105,97,103,110,111,115,116,105,99,115,58,32,100,105,97,103,115,44,32,105,110,115,116,114,117,109,101,110,116,115,58,32,91,93,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,117,109,98,101,114,115,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,105,110,115,116,114,32,111,102,32,105,110,115,116,114,117,109,101,110,116,115,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,105,110,115,116,114,117,109,101,110,116,115,46,115,101,116,40,105,110,115,116,114,46,110,117,109,98,101,114,44,32,99,111,109,112,105,108,101,73,110,115,116,114,117,109,101,110,116,40,105,110,115,116,114,44,32,116,104,105,115,46,99,111,110,102,105,103,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,110,117,109,98,101,114,115,46,112,117,115,104,40,105,110,115,116,114,46,110,117,109,98,101,114,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,110,117,109,98,101,114,115,46,115,111,114,116,40,40,97,44,32,98,41,32,61,62,32,97,32,45,32,98,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,97,121,40,110,117,109,98,101,114,115,46,108,101,110,103,116,104,32,63,32,96,99,111,109,112,105,108,101,100,32,105,110,115,116,114,32,36,123,110,117,109,98,101,114,115,46,106,111,105,110,40,34,44,32,34,41,125,96,32,58,32,34,99,111,109,112,105,108,101,100,32,101,109,112,116,121,32,111,114,99,104,101,115,116,114,97,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,123,32,111,107,58,32,116,114,117,101,44,32,100,105,97,103,110,111,115,116,105,99,115,58,32,91,93,44,32,105,110,115,116,114,117,109,101,110,116,115,58,32,110,117,109,98,101,114,115,32,125,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,97,100,83,99,111,114,101,40,116,101,120,116,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,123,32,101,118,101,110,116,115,44,32,100,105,97,103,110,111,115,116,105,99,115,32,125,32,61,32,112,97,114,115,101,83,99,111,114,101,40,116,101,120,116,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,100,105,97,103,110,111,115,116,105,99,115,46,108,101,110,103,116,104,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,100,105,97,103,110,111,115,116,105,99,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,101,118,32,111,102,32,101,118,101,110,116,115,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,101,110,100,69,118,101,110,116,40,101,118,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,91,93,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,115,101,110,100,69,118,101,110,116,40,101,118,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,102,103,32,61,32,116,104,105,115,46,99,111,110,102,105,103,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,115,116,97,114,116,65,98,115,32,61,32,116,104,105,115,46,116,105,109,101,83,101,99,111,110,100,115,32,43,32,77,97,116,104,46,109,97,120,40,101,118,46,115,116,97,114,116,44,32,48,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,102,114,97,109,101,32,61,32,77,97,116,104,46,102,108,111,111,114,40,115,116,97,114,116,65,98,115,32,42,32,99,102,103,46,115,114,32,43,32,70,82,65,77,69,95,69,80,83,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,108,111,99,107,32,61,32,77,97,116,104,46,109,97,120,40,77,97,116,104,46,102,108,111,111,114,40,102,114,97,109,101,32,47,32,99,102,103,46,107,115,109,112,115,41,44,32,116,104,105,115,46,98,108,111,99,107,73,110,100,101,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,101,113,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,113,32,61,32,123,32,98,108,111,99,107,44,32,115,116,97,114,116,58,32,115,116,97,114,116,65,98,115,44,32,115,101,113,58,32,116,104,105,115,46,115,101,113,44,32,101,118,101,110,116,58,32,101,118,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,47,47,32,107,101,101,112,32,112,101,110,100,105,110,103,32,115,111,114,116,101,100,32,98,121,32,40,98,108,111,99,107,44,32,115,116,97,114,116,44,32,115,101,113,41,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,108,111,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,104,105,32,61,32,116,104,105,115,46,112,101,110,100,105,110,103,46,108,101,110,103,116,104,59,10,32,32,32,32,32,32,32,32,32,32,32,32,119,104,105,108,101,32,40,108,111,32,60,32,104,105,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,109,105,100,32,61,32,40,108,111,32,43,32,104,105,41,32,62,62,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,112,32,61,32,116,104,105,115,46,112,101,110,100,105,110,103,91,109,105,100,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,112,46,98,108,111,99,107,32,60,32,113,46,98,108,111,99,107,32,124,124,32,40,112,46,98,108,111,99,107,32,61,61,61,32,113,46,98,108,111,99,107,32,38,38,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,40,112,46,115,116,97,114,116,32,60,32,113,46,115,116,97,114,116,32,124,124,32,40,112,46,115,116,97,114,116,32,61,61,61,32,113,46,115,116,97,114,116,32,38,38,32,112,46,115,101,113,32,60,32,113,46,115,101,113,41,41,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,108,111,32,61,32,109,105,100,32,43,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,104,105,32,61,32,109,105,100,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,112,101,110,100,105,110,103,46,115,112,108,105,99,101,40,108,111,44,32,48,44,32,113,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,115,101,116,67,104,97,110,110,101,108,40,110,97,109,101,44,32,118,97,108,117,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,110,97,109,101,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,110,101,119,32,69,114,114,111,114,40,34,99,104,97,110,110,101,108,32,110,97,109,101,32,109,117,115,116,32,98,101,32,110,111,110,45,101,109,112,116,121,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,98,117,115,46,115,101,116,40,110,97,109,101,44,32,118,97,108,117,101,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,103,101,116,67,104,97,110,110,101,108,40,110,97,109,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,110,97,109,101,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,110,101,119,32,69,114,114,111,114,40,34,99,104,97,110,110,101,108,32,110,97,109,101,32,109,117,115,116,32,98,101,32,110,111,110,45,101,109,112,116,121,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,104,105,115,46,98,117,115,46,103,101,116,40,110,97,109,101,41,32,63,63,32,48,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,101,114,102,111,114,109,66,108,111,99,107,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,104,105,115,46,102,105,110,105,115,104,101,100,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,99,116,105,118,97,116,101,68,117,101,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,112,111,117,116,46,102,105,108,108,40,48,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,110,111,116,101,32,111,102,32,116,104,105,115,46,97,99,116,105,118,101,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,114,101,110,100,101,114,78,111,116,101,40,110,111,116,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,99,116,105,118,101,32,61,32,116,104,105,115,46,97,99,116,105,118,101,46,102,105,108,116,101,114,40,40,110,41,32,61,62,32,110,46,98,108,111,99,107,115,76,101,102,116,32,61,61,61,32,110,117,108,108,32,124,124,32,110,46,98,108,111,99,107,115,76,101,102,116,32,62,32,48,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,98,108,111,99,107,73,110,100,101,120,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,104,105,115,46,101,110,100,82,101,97,99,104,101,100,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,110,105,115,104,101,100,32,61,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,48,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,97,99,116,105,118,97,116,101,68,117,101,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,116,97,107,101,110,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,113,32,111,102,32,116,104,105,115,46,112,101,110,100,105,110,103,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,113,46,98,108,111,99,107,32,62,32,116,104,105,115,46,98,108,111,99,107,73,110,100,101,120,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,97,107,101,110,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,101,118,32,61,32,113,46,101,118,101,110,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,101,118,46,107,105,110,100,32,61,61,61,32,34,101,110,100,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,110,100,82,101,97,99,104,101,100,32,61,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,105,102,32,40,101,118,46,107,105,110,100,32,61,61,61,32,34,114,101,108,101,97,115,101,34,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,114,101,108,101,97,115,101,40,101,118,46,105,110,115,116,114,44,32,101,118,46,107,101,121,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,116,97,114,116,78,111,116,101,40,113,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,97,107,101,110,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,112,101,110,100,105,110,103,46,115,112,108,105,99,101,40,48,44,32,116,97,107,101,110,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,115,116,97,114,116,78,111,116,101,40,113,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,101,118,32,61,32,113,46,101,118,101,110,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,111,109,112,105,108,101,100,32,61,32,116,104,105,115,46,105,110,115,116,114,117,109,101,110,116,115,46,103,101,116,40,101,118,46,105,110,115,116,114,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,99,111,109,112,105,108,101,100,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,97,121,40,96,119,97,114,110,105,110,103,58,32,105,110,115,116,114,32,36,123,101,118,46,105,110,115,116,114,125,32,110,111,116,32,100,101,102,105,110,101,100,59,32,110,111,116,101,32,100,114,111,112,112,101,100,96,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,102,103,32,61,32,116,104,105,115,46,99,111,110,102,105,103,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,108,111,99,107,115,32,61,32,101,118,46,100,117,114,32,60,32,48,32,63,32,110,117,108,108,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,58,32,77,97,116,104,46,109,97,120,40,49,44,32,77,97,116,104,46,99,101,105,108,40,101,118,46,100,117,114,32,42,32,99,102,103,46,115,114,32,47,32,99,102,103,46,107,115,109,112,115,32,45,32,70,82,65,77,69,95,69,80,83,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,116,120,32,61,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,118,97,108,115,58,32,110,101,119,32,70,108,111,97,116,54,52,65,114,114,97,121,40,99,111,109,112,105,108,101,100,46,110,118,97,108,115,41,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,116,97,116,101,58,32,110,101,119,32,70,108,111,97,116,54,52,65,114,114,97,121,40,99,111,109,112,105,108,101,100,46,110,115,116,97,116,101,41,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,104,97,110,115,58,32,110,101,119,32,70,108,111,97,116,54,52,65,114,114,97,121,40,99,111,109,112,105,108,101,100,46,99,104,97,110,78,97,109,101,115,46,108,101,110,103,116,104,41,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,102,105,101,108,100,115,58,32,91,101,118,46,105,110,115,116,114,44,32,113,46,115,116,97,114,116,44,32,101,118,46,100,117,114,44,32,46,46,46,101,118,46,112,102,105,101,108,100,115,93,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,112,105,110,58,32,116,104,105,115,46,115,112,105,110,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,110,79,102,102,58,32,48,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,107,58,32,48,44,10,32,32,32,32,32,32,32,32,32,32,32,32,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,99,116,105,118,101,46,112,117,115,104,40,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,110,115,116,114,78,117,109,58,32,101,118,46,105,110,115,116,114,44,32,99,111,109,112,105,108,101,100,44,32,99,116,120,44,32,102,114,97,109,101,115,68,111,110,101,58,32,48,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,108,111,99,107,115,76,101,102,116,58,32,98,108,111,99,107,115,44,32,104,101,108,100,58,32,98,108,111,99,107,115,32,61,61,61,32,110,117,108,108,44,32,107,101,121,58,32,101,118,46,107,101,121,44,10,32,32,32,32,32,32,32,32,32,32,32,32,125,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,108,101,97,115,101,40,105,110,115,116,114,44,32,107,101,121,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,47,47,32,114,101,108,101,97,115,101,100,32,110,111,116,101,115,32,100,111,32,110,111,116,32,114,101,110,100,101,114,32,116,104,101,32,98,108,111,99,107,32,116,104,101,32,114,101,108,101,97,115,101,32,108,97,110,100,115,32,105,110,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,105,32,61,32,48,59,32,105,32,60,32,116,104,105,115,46,97,99,116,105,118,101,46,108,101,110,103,116,104,59,32,105,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,32,61,32,116,104,105,115,46,97,99,116,105,118,101,91,105,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,46,104,101,108,100,32,38,38,32,110,46,105,110,115,116,114,78,117,109,32,61,61,61,32,105,110,115,116,114,32,38,38,32,110,46,107,101,121,32,61,61,61,32,107,101,121,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,99,116,105,118,101,46,115,112,108,105,99,101,40,105,44,32,49,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,110,100,101,114,78,111,116,101,40,110,111,116,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,123,32,99,111,109,112,105,108,101,100,44,32,99,116,120,32,125,32,61,32,110,111,116,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,105,32,61,32,48,59,32,105,32,60,32,99,111,109,112,105,108,101,100,46,99,104,97,110,78,97,109,101,115,46,108,101,110,103,116,104,59,32,105,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,116,120,46,99,104,97,110,115,91,105,93,32,61,32,116,104,105,115,46,98,117,115,46,103,101,116,40,99,111,109,112,105,108,101,100,46,99,104,97,110,78,97,109,101,115,91,105,93,41,32,63,63,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,102,103,32,61,32,116,104,105,115,46,99,111,110,102,105,103,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,115,112,111,117,116,32,61,32,116,104,105,115,46,115,112,111,117,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,107,48,32,61,32,110,111,116,101,46,102,114,97,109,101,115,68,111,110,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,105,32,61,32,48,59,32,105,32,60,32,99,102,103,46,107,115,109,112,115,59,32,105,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,116,120,46,107,32,61,32,107,48,32,43,32,105,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,116,120,46,105,110,79,102,102,32,61,32,105,32,42,32,99,102,103,46,110,99,104,110,108,115,73,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,91,115,108,111,116,44,32,102,110,93,32,111,102,32,99,111,109,112,105,108,101,100,46,97,115,115,105,103,110,115,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,116,120,46,118,97,108,115,91,115,108,111,116,93,32,61,32,102,110,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,97,115,101,32,61,32,105,32,42,32,99,102,103,46,110,99,104,110,108,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,99,104,32,61,32,48,59,32,99,104,32,60,32,99,111,109,112,105,108,101,100,46,111,117,116,115,46,108,101,110,103,116,104,59,32,99,104,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,118,32,61,32,99,111,109,112,105,108,101,100,46,111,117,116,115,91,99,104,93,40,99,116,120,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,78,117,109,98,101,114,46,105,115,70,105,110,105,116,101,40,118,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,112,111,117,116,91,98,97,115,101,32,43,32,99,104,93,32,43,61,32,118,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,108,97,109,112,101,100,83,97,109,112,108,101,115,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,110,111,116,101,46,102,114,97,109,101,115,68,111,110,101,32,43,61,32,99,102,103,46,107,115,109,112,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,110,111,116,101,46,98,108,111,99,107,115,76,101,102,116,32,33,61,61,32,110,117,108,108,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,110,111,116,101,46,98,108,111,99,107,115,76,101,102,116,32,45,61,32,49,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,114,101,115,101,116,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,105,110,115,116,114,117,109,101,110,116,115,46,99,108,101,97,114,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,98,117,115,46,99,108,101,97,114,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,112,101,110,100,105,110,103,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,99,116,105,118,101,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,112,105,110,46,102,105,108,108,40,48,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,112,111,117,116,46,102,105,108,108,40,48,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,98,108,111,99,107,73,110,100,101,120,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,110,105,115,104,101,100,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,110,100,82,101,97,99,104,101,100,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,108,97,109,112,101,100,83,97,109,112,108,101,115,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,101,113,32,61,32,48,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,125,10,32,32,32,32,47,47,32,45,45,45,45,32,115,97,110,100,98,111,120,32,102,105,108,101,115,121,115,116,101,109,32,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,10,32,32,32,32,99,108,97,115,115,32,86,102,115,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,114,117,99,116,111,114,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,108,101,115,32,61,32,110,101,119,32,77,97,112,40,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,110,111,114,109,97,108,105,122,101,40,112,97,116,104,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,112,97,116,104,32,124,124,32,112,97,116,104,46,105,110,99,108,117,100,101,115,40,34,92,92,34,41,32,124,124,32,112,97,116,104,46,115,116,97,114,116,115,87,105,116,104,40,34,47,34,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,110,101,119,32,69,114,114,111,114,40,96,105,110,118,97,108,105,100,32,112,97,116,104,58,32,36,123,112,97,116,104,125,96,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,112,97,114,116,115,32,61,32,112,97,116,104,46,115,112,108,105,116,40,34,47,34,41,46,102,105,108,116,101,114,40,40,112,41,32,61,62,32,112,32,33,61,61,32,34,34,32,38,38,32,112,32,33,61,61,32,34,46,34,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,112,97,114,116,115,46,108,101,110,103,116,104,32,124,124,32,112,97,114,116,115,46,105,110,99,108,117,100,101,115,40,34,46,46,34,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,114,111,119,32,110,101,119,32,69,114,114,111,114,40,96,105,110,118,97,108,105,100,32,112,97,116,104,58,32,36,123,112,97,116,104,125,96,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,112,97,114,116,115,46,106,111,105,110,40,34,47,34,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,119,114,105,116,101,40,112,97,116,104,44,32,100,97,116,97,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,108,101,115,46,115,101,116,40,116,104,105,115,46,110,111,114,109,97,108,105,122,101,40,112,97,116,104,41,44,32,100,97,116,97,46,115,108,105,99,101,40,41,41,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,108,105,115,116,40,112,114,101,102,105,120,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,111,117,116,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,91,112,97,116,104,44,32,100,97,116,97,93,32,111,102,32,116,104,105,115,46,102,105,108,101,115,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,112,97,116,104,46,115,116,97,114,116,115,87,105,116,104,40,112,114,101,102,105,120,41,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,111,117,116,46,112,117,115,104,40,91,112,97,116,104,44,32,100,97,116,97,46,108,101,110,103,116,104,93,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,111,117,116,46,115,111,114,116,40,40,97,44,32,98,41,32,61,62,32,40,97,91,48,93,32,60,32,98,91,48,93,32,63,32,45,49,32,58,32,97,91,48,93,32,62,32,98,91,48,93,32,63,32,49,32,58,32,48,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,111,117,116,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,125,10,32,32,32,32,47,47,32,45,45,45,45,32,112,114,111,99,101,115,115,111,114,32,99,111,114,101,32,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,45,10,32,32,32,32,99,111,110,115,116,32,73,78,66,79,88,95,67,65,80,65,67,73,84,89,32,61,32,49,48,50,52,59,10,32,32,32,32,47,42,42,10,32,32,32,32,32,42,32,82,101,110,100,101,114,45,99,111,110,116,101,120,116,32,115,116,97,116,101,32,109,97,99,104,105,110,101,58,32,111,119,110,115,32,116,104,101,32,101,110,103,105,110,101,32,97,110,100,32,97,100,97,112,116,115,32,105,116,115,32,107,115,109,112,115,10,32,32,32,32,32,42,32,98,108,111,99,107,32,116,111,32,97,110,121,32,104,111,115,116,32,98,117,102,102,101,114,32,118,105,97,32,116,104,101,32,99,110,116,32,97,117,116,111,109,97,116,111,110,46,32,77,101,115,115,97,103,101,115,32,97,114,101,32,97,112,112,108,105,101,100,10,32,32,32,32,32,42,32,111,110,108,121,32,97,116,32,116,104,101,32,115,116,97,114,116,32,111,102,32,97,32,112,114,111,99,101,115,115,32,99,97,108,108,46,32,79,110,99,101,32,116,104,101,32,101,110,103,105,110,101,32,102,105,110,105,115,104,101,115,44,32,111,117,116,112,117,116,10,32,32,32,32,32,42,32,102,114,97,109,101,115,32,97,114,101,32,122,101,114,111,115,32,97,110,100,32,99,110,116,32,102,114,101,101,122,101,115,32,115,111,32,98,117,102,102,101,114,32,105,110,100,105,99,101,115,32,115,116,97,121,32,98,111,117,110,100,101,100,46,10,32,32,32,32,32,42,47,10,32,32,32,32,99,108,97,115,115,32,80,114,111,99,101,115,115,111,114,67,111,114,101,32,123,10,32,32,32,32,32,32,32,32,99,111,110,115,116,114,117,99,116,111,114,40,99,111,110,102,105,103,44,32,101,109,105,116,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,118,102,115,32,61,32,110,101,119,32,86,102,115,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,116,97,116,117,115,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,114,117,110,110,105,110,103,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,100,114,111,112,112,101,100,77,101,115,115,97,103,101,115,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,105,110,98,111,120,32,61,32,91,93,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,110,105,115,104,101,100,69,109,105,116,116,101,100,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,110,103,105,110,101,32,61,32,110,101,119,32,69,110,103,105,110,101,40,99,111,110,102,105,103,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,32,61,32,101,109,105,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,110,103,105,110,101,46,99,111,110,115,111,108,101,32,61,32,40,116,101,120,116,41,32,61,62,32,116,104,105,115,46,101,109,105,116,40,123,32,116,121,112,101,58,32,34,99,111,110,115,111,108,101,34,44,32,112,97,121,108,111,97,100,58,32,123,32,116,101,120,116,32,125,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,110,116,32,61,32,99,111,110,102,105,103,46,107,115,109,112,115,59,32,47,47,32,102,105,114,115,116,32,114,117,110,110,105,110,103,32,112,114,111,99,101,115,115,32,99,97,108,108,32,112,101,114,102,111,114,109,115,32,97,116,32,111,110,99,101,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,111,115,116,40,109,115,103,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,116,104,105,115,46,105,110,98,111,120,46,108,101,110,103,116,104,32,62,61,32,73,78,66,79,88,95,67,65,80,65,67,73,84,89,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,100,114,111,112,112,101,100,77,101,115,115,97,103,101,115,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,105,110,98,111,120,46,112,117,115,104,40,109,115,103,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,97,112,112,108,121,77,101,115,115,97,103,101,115,40,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,101,110,103,105,110,101,32,61,32,116,104,105,115,46,101,110,103,105,110,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,109,115,103,32,111,102,32,116,104,105,115,46,105,110,98,111,120,46,115,112,108,105,99,101,40,48,41,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,114,121,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,112,32,61,32,109,115,103,46,112,97,121,108,111,97,100,32,63,63,32,123,125,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,119,105,116,99,104,32,40,109,115,103,46,116,121,112,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,99,111,109,112,105,108,101,45,111,114,99,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,114,101,115,117,108,116,32,61,32,101,110,103,105,110,101,46,99,111,109,112,105,108,101,79,114,99,40,112,46,115,111,117,114,99,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,40,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,121,112,101,58,32,34,99,111,109,112,105,108,101,45,114,101,115,117,108,116,34,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,97,121,108,111,97,100,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,111,107,58,32,114,101,115,117,108,116,46,111,107,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,105,97,103,110,111,115,116,105,99,115,58,32,114,101,115,117,108,116,46,100,105,97,103,110,111,115,116,105,99,115,46,109,97,112,40,40,100,41,32,61,62,32,91,100,46,108,105,110,101,44,32,100,46,99,111,108,117,109,110,44,32,100,46,109,101,115,115,97,103,101,93,41,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,114,101,97,100,45,115,99,111,114,101,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,100,105,97,103,115,32,61,32,101,110,103,105,110,101,46,114,101,97,100,83,99,111,114,101,40,112,46,116,101,120,116,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,99,111,110,115,116,32,100,32,111,102,32,100,105,97,103,115,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,40,123,32,116,121,112,101,58,32,34,99,111,110,115,111,108,101,34,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,97,121,108,111,97,100,58,32,123,32,116,101,120,116,58,32,96,101,114,114,111,114,58,32,108,105,110,101,32,36,123,100,46,108,105,110,101,125,58,36,123,100,46,99,111,108,117,109,110,125,58,32,36,123,100,46,109,101,115,115,97,103,101,125,96,32,125,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,101,118,101,110,116,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,110,103,105,110,101,46,115,101,110,100,69,118,101,110,116,40,112,46,101,118,101,110,116,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,115,101,116,45,99,104,97,110,110,101,108,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,110,103,105,110,101,46,115,101,116,67,104,97,110,110,101,108,40,112,46,110,97,109,101,44,32,112,46,118,97,108,117,101,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,103,101,116,45,99,104,97,110,110,101,108,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,40,123,32,116,121,112,101,58,32,34,99,104,97,110,110,101,108,45,118,97,108,117,101,34,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,97,121,108,111,97,100,58,32,123,32,114,101,113,117,101,115,116,95,105,100,58,32,112,46,114,101,113,117,101,115,116,95,105,100,44,32,118,97,108,117,101,58,32,101,110,103,105,110,101,46,103,101,116,67,104,97,110,110,101,108,40,112,46,110,97,109,101,41,32,125,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,109,105,100,105,34,58,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,101,118,32,61,32,109,105,100,105,84,111,69,118,101,110,116,40,112,46,115,116,97,116,117,115,44,32,112,46,100,49,44,32,112,46,100,50,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,101,118,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,110,103,105,110,101,46,115,101,110,100,69,118,101,110,116,40,101,118,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,119,114,105,116,101,45,102,105,108,101,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,118,102,115,46,119,114,105,116,101,40,112,46,112,97,116,104,44,32,85,105,110,116,56,65,114,114,97,121,46,102,114,111,109,40,112,46,100,97,116,97,41,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,108,105,115,116,45,102,105,108,101,115,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,40,123,32,116,121,112,101,58,32,34,102,105,108,101,45,108,105,115,116,34,44,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,112,97,121,108,111,97,100,58,32,123,32,114,101,113,117,101,115,116,95,105,100,58,32,112,46,114,101,113,117,101,115,116,95,105,100,44,32,101,110,116,114,105,101,115,58,32,116,104,105,115,46,118,102,115,46,108,105,115,116,40,112,46,112,114,101,102,105,120,41,32,125,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,115,116,97,114,116,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,114,117,110,110,105,110,103,32,61,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,115,116,111,112,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,114,117,110,110,105,110,103,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,115,101,32,34,114,101,115,101,116,34,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,110,103,105,110,101,46,114,101,115,101,116,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,110,116,32,61,32,101,110,103,105,110,101,46,99,111,110,102,105,103,46,107,115,109,112,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,116,97,116,117,115,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,110,105,115,104,101,100,69,109,105,116,116,101,100,32,61,32,102,97,108,115,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,98,114,101,97,107,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,100,101,102,97,117,108,116,58,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,40,123,32,116,121,112,101,58,32,34,99,111,110,115,111,108,101,34,44,32,112,97,121,108,111,97,100,58,32,123,32,116,101,120,116,58,32,96,101,114,114,111,114,58,32,117,110,107,110,111,119,110,32,109,101,115,115,97,103,101,32,39,36,123,109,115,103,46,116,121,112,101,125,39,96,32,125,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,97,116,99,104,32,40,101,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,40,123,32,116,121,112,101,58,32,34,99,111,110,115,111,108,101,34,44,32,112,97,121,108,111,97,100,58,32,123,32,116,101,120,116,58,32,96,101,114,114,111,114,58,32,36,123,101,46,109,101,115,115,97,103,101,125,96,32,125,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,112,114,111,99,101,115,115,40,105,110,112,117,116,115,44,32,111,117,116,112,117,116,115,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,97,112,112,108,121,77,101,115,115,97,103,101,115,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,33,116,104,105,115,46,114,117,110,110,105,110,103,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,101,110,103,105,110,101,32,61,32,116,104,105,115,46,101,110,103,105,110,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,99,102,103,32,61,32,101,110,103,105,110,101,46,99,111,110,102,105,103,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,107,115,109,112,115,32,61,32,99,102,103,46,107,115,109,112,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,122,101,114,111,100,98,102,115,32,61,32,99,102,103,46,122,101,114,111,100,98,102,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,115,112,105,110,32,61,32,101,110,103,105,110,101,46,115,112,105,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,115,112,111,117,116,32,61,32,101,110,103,105,110,101,46,115,112,111,117,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,99,110,116,32,61,32,116,104,105,115,46,99,110,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,108,101,116,32,115,116,97,116,117,115,32,61,32,116,104,105,115,46,115,116,97,116,117,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,98,117,102,102,101,114,76,101,110,32,61,32,111,117,116,112,117,116,115,91,48,93,46,108,101,110,103,116,104,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,73,110,32,61,32,77,97,116,104,46,109,105,110,40,105,110,112,117,116,115,46,108,101,110,103,116,104,44,32,99,102,103,46,110,99,104,110,108,115,73,110,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,110,79,117,116,32,61,32,111,117,116,112,117,116,115,46,108,101,110,103,116,104,59,10,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,105,32,61,32,48,59,32,105,32,60,32,98,117,102,102,101,114,76,101,110,59,32,105,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,99,110,116,32,61,61,61,32,107,115,109,112,115,32,38,38,32,115,116,97,116,117,115,32,61,61,61,32,48,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,116,97,116,117,115,32,61,32,101,110,103,105,110,101,46,112,101,114,102,111,114,109,66,108,111,99,107,40,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,110,116,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,115,116,97,116,117,115,32,33,61,61,32,48,32,38,38,32,33,116,104,105,115,46,102,105,110,105,115,104,101,100,69,109,105,116,116,101,100,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,102,105,110,105,115,104,101,100,69,109,105,116,116,101,100,32,61,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,101,109,105,116,40,123,32,116,121,112,101,58,32,34,102,105,110,105,115,104,101,100,34,44,32,112,97,121,108,111,97,100,58,32,123,125,32,125,41,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,105,102,32,40,115,116,97,116,117,115,32,61,61,61,32,48,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,105,110,66,97,115,101,32,61,32,99,110,116,32,42,32,99,102,103,46,110,99,104,110,108,115,73,110,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,99,104,32,61,32,48,59,32,99,104,32,60,32,110,73,110,59,32,99,104,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,115,112,105,110,91,105,110,66,97,115,101,32,43,32,99,104,93,32,61,32,105,110,112,117,116,115,91,99,104,93,91,105,93,32,42,32,122,101,114,111,100,98,102,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,111,110,115,116,32,111,117,116,66,97,115,101,32,61,32,99,110,116,32,42,32,99,102,103,46,110,99,104,110,108,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,99,104,32,61,32,48,59,32,99,104,32,60,32,110,79,117,116,59,32,99,104,43,43,41,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,111,117,116,112,117,116,115,91,99,104,93,91,105,93,32,61,32,99,104,32,60,32,99,102,103,46,110,99,104,110,108,115,32,63,32,115,112,111,117,116,91,111,117,116,66,97,115,101,32,43,32,99,104,93,32,47,32,122,101,114,111,100,98,102,115,32,58,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,99,110,116,32,43,61,32,49,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,101,108,115,101,32,123,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,102,111,114,32,40,108,101,116,32,99,104,32,61,32,48,59,32,99,104,32,60,32,110,79,117,116,59,32,99,104,43,43,41,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,111,117,116,112,117,116,115,91,99,104,93,91,105,93,32,61,32,48,59,10,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,125,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,99,110,116,32,61,32,99,110,116,59,10,32,32,32,32,32,32,32,32,32,32,32,32,116,104,105,115,46,115,116,97,116,117,115,32,61,32,115,116,97,116,117,115,59,10,32,32,32,32,32,32,32,32,32,32,32,32,114,101,116,117,114,110,32,116,114,117,101,59,10,32,32,32,32,32,32,32,32,125,10,32,32,32,32,125,10,32,32,32,32,103,108,111,98,97,108,84,104,105,115,46,95,95,98,108,111,99,107,115,121,110,116,104,69,110,103,105,110,101,77,111,100,117,108,101,32,61,32,123,10,32,32,32,32,32,32,32,32,118,101,114,115,105,111,110,58,32,34,48,46,49,46,48,34,44,10,32,32,32,32,32,32,32,32,99,114,101,97,116,101,69,110,103,105,110,101,58,32,40,99,111,110,102,105,103,41,32,61,62,32,110,101,119,32,69,110,103,105,110,101,40,99,111,110,102,105,103,41,44,10,32,32,32,32,32,32,32,32,99,114,101,97,116,101,80,114,111,99,101,115,115,111,114,67,111,114,101,58,32,40,99,111,110,102,105,103,44,32,101,109,105,116,41,32,61,62,32,110,101,119,32,80,114,111,99,101,115,115,111,114,67,111,114,101,40,99,111,110,102,105,103,44,32,101,109,105,116,41,44,10,32,32,32,32,32,32,32,32,112,97,114,115,101,79,114,99,104,101,115,116,114,97,44,10,32,32,32,32,32,32,32,32,112,97,114,115,101,83,99,111,114,101,44,10,32,32,32,32,32,32,32,32,109,105,100,105,84,111,69,118,101,110,116,44,10,32,32,32,32,125,59,10,125,41,40,41,59,10]);
globalThis.ENGINE_MODULE_BYTES = ENGINE_MODULE_BYTES;
