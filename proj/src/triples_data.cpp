// The 101 orbit representatives of the bounded {2,3}-solution tables, in
// printed order: the 56 orbits meeting T*_{2,3,inf}, then the 45 others.
// Every row is validated at load: sum zero, coprime, normalized, qualifying.

namespace ff {

const char* kOrbitRows[][3] = {
    // block one, left column
    {"1", "1", "-2"},
    {"2", "1", "-3"},
    {"3", "1", "-2^2"},
    {"2^3", "1", "-3^2"},
    {"5^3", "3", "-2^7"},
    {"-5^2", "2^4", "3^2"},
    {"-5^2", "2^3*3", "1"},
    {"5^2", "2", "-3^3"},
    {"-7^2", "2^4*3", "1"},
    {"7^2", "2^5", "-3^4"},
    {"2*11^2", "1", "-3^5"},
    {"-17^2", "2^5*3^2", "1"},
    {"-131^2", "5^6", "2^9*3"},
    {"-11^3", "2*5^4", "3^4"},
    {"2*7^2", "-5^3", "3^3"},
    {"11^2", "-5^3", "2^2"},
    {"13^2", "-2*5^3", "3^4"},
    {"2^2*5^2", "-7^3", "3^5"},
    {"17^2", "-7^3", "2*3^3"},
    {"-19^2", "7^3", "2*3^2"},
    {"19^2", "5^3", "-2*3^5"},
    {"13^2", "7^3", "-2^9"},
    {"3^3*7^2", "-11^3", "2^3"},
    {"37^2", "-2^2*7^3", "3"},
    {"-3*23^2", "11^3", "2^8"},
    {"35^2", "-13^3", "2^2*3^5"},
    {"2^2*23^2", "-13^3", "3^4"},
    {"-47^2", "13^3", "2^2*3"},
    // block one, right column
    {"-2^3*17^2", "5^3", "3^7"},
    {"59^2", "-3*11^3", "2^9"},
    {"61^2", "3*5^3", "-2^12"},
    {"-71^2", "17^3", "2^7"},
    {"-2^3*3^2*13^2", "23^3", "1"},
    {"11^2", "23^3", "-2^12*3"},
    {"73^2", "23^3", "-2^3*3^7"},
    {"143^2", "-3*19^3", "2^7"},
    {"2^3*73^2", "-35^3", "3^5"},
    {"107^2", "-3^2*17^3", "2^15"},
    {"-215^2", "19^3", "2*3^9"},
    {"-253^2", "2^9*5^3", "3^2"},
    {"-359^2", "3*35^3", "2^8"},
    {"545^2", "-2*53^3", "3^6"},
    {"595^2", "-73^3", "2^4*3^7"},
    {"-3*389^2", "2*61^3", "1"},
    {"-827^2", "73^3", "2^15*3^2"},
    {"955^2", "-97^3", "2^3*3^4"},
    {"1871^2", "-3^2*73^3", "2^9"},
    {"2359^2", "47^3", "-2^5*3^11"},
    {"2681^2", "-193^3", "2^4*3^4"},
    {"-2*2761^2", "239^3", "3^13"},
    {"8549^2", "-3^5*67^3", "2^3"},
    {"-23053^2", "505^3", "2^27*3"},
    {"2*21395^2", "-971^3", "3^8"},
    {"39151^2", "-1153^3", "2^5*3^5"},
    {"-3*48383^2", "1915^3", "2^13"},
    {"-2*184211^2", "4079^3", "3"},
    // block two, left column
    {"2^5", "-3*5^3", "7^3"},
    {"23^2", "-5^4", "2^5*3"},
    {"7^2", "-5^4", "2^6*3^2"},
    {"-29^2", "5^4", "2^3*3^3"},
    {"47^2", "-7^4", "2^6*3"},
    {"2^5*3*5^2", "-7^4", "1"},
    {"-113^2", "7^4", "2^7*3^4"},
    {"-2^2*61^2", "11^4", "3^5"},
    {"239^2", "-2*13^4", "1"},
    {"287^2", "-17^4", "2^7*3^2"},
    {"2*5861^2", "-3^2*59^4", "7^9"},
    {"2*13^2", "-3*19^4", "5^8"},
    {"437147^2", "-21769^3", "2^9*3^4*5^12"},
    {"1169^2", "2^3*3^4*5^4", "-11^6"},
    {"2591^2", "-3*43^4", "2*11^6"},
    {"14089^2", "-131^4", "2^11*3*5^6"},
    {"3^2*5^3", "2^2*19^3", "-13^4"},
    {"-37^3", "2*29^3", "3*5^4"},
    {"-2^8*7^3", "3*29^3", "11^4"},
    {"-71^3", "23^3", "2^4*3^2*7^4"},
    {"-2*203^3", "3^3*79^3", "43^4"},
    {"2293^2", "2*67^3", "-3*5^9"},
    {"1079^2", "-2^10*19^3", "3*5^9"},
    {"-3*36553^2", "203^3", "2^11*5^9"},
    {"-138743^2", "3*1027^3", "2^13*5^9"},
    {"2^3*3^2*12515^2", "-2797^3", "13^9"},
    {"107567^2", "-3*3155^3", "2^11*7^9"},
    // block two, right column
    {"-2*3*263^2", "29^3", "5^8"},
    {"-2^2*353^2", "3^4*11^3", "5^8"},
    {"5239^2", "-3^2*163^3", "2*7^8"},
    {"-2^5*4015^2", "799^3", "7^8"},
    {"26311^2", "2^4*3^2*95^3", "-13^8"},
    {"-32039^2", "241^3", "2^5*3^4*5^8"},
    {"-39313^2", "2*767^3", "3*11^8"},
    {"31987^2", "-1489^3", "2^3*3^6*5^8"},
    {"36631^2", "1679^3", "-2^6*3^5*5^8"},
    {"-99431^2", "2^3*1073^3", "3^2*5^8"},
    {"-160975^2", "2^10*3*203^3", "11^8"},
    {"-185039^2", "1633^3", "2^6*3^4*7^8"},
    {"2^2*774517^2", "-15613^3", "3^8*11^8"},
    {"-6827035^2", "2*28559^3", "3^3*13^8"},
    {"9101359^2", "-43873^3", "2^7*3^7*7^8"},
    {"-26615519^2", "78913^3", "2^7*3^5*17^8"},
    {"-30042907^2", "2^3*3^3*16037^3", "43^8"},
    {"2*45707519^2", "1171537^3", "-3^5*95^8"},
};

extern const int kOrbitRowCount = sizeof(kOrbitRows) / sizeof(kOrbitRows[0]);

}  // namespace ff
